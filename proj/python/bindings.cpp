#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qap/core.hpp"
#include "qap/decomposition.hpp"
#include "qap/generators.hpp"
#include "qap/io.hpp"
#include "qap/recognizers.hpp"
#include "qap/reports.hpp"
#include "qap/solver.hpp"

namespace py = pybind11;
using namespace qap;

namespace {

Permutation to_perm(const std::vector<int>& images) { return Permutation(images); }

ExactMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != n) throw std::invalid_argument("rows must form a square matrix");
        for (int j = 1; j <= n; ++j) m.at(i, j) = parse_rational(rows[i - 1][j - 1]);
    }
    return m;
}

std::string classify_json(const ExactMatrix& m) { return reports::classification(classify(m)).dump(); }

std::string decompose_json(const ExactMatrix& m, const std::string& mode) {
    nlohmann::ordered_json j;
    j["mode"] = mode;
    if (mode == "kalmanson") {
        auto dec = kalmanson_decomposition(m);
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [kl, w] : dec.delta)
            terms.push_back({{"cut", {kl.first, kl.second}}, {"delta", reports::rational(w)}});
        j["interior_cuts"] = terms;
        auto boundary = nlohmann::ordered_json::array();
        for (const auto& [i, alpha] : dec.alpha)
            boundary.push_back(
                {{"i", i}, {"alpha", reports::rational(alpha)}, {"beta", reports::rational(dec.beta.at(i))}});
        j["boundary_cuts"] = boundary;
        j["residual_gammas"] = reports::rationals(dec.gammas);
    } else if (mode == "robinson-kalmanson") {
        j.update(reports::conic_decomposition(robinson_kalmanson_decomposition(m)));
    } else if (mode == "cdw") {
        auto res = cdw_decomposition(m);
        if (auto* viol = std::get_if<CdwViolation>(&res)) {
            j["verdict"] = "infeasible";
            j["violated"] = {{"k", viol->k}, {"l", viol->l}};
        } else {
            j["verdict"] = "yes";
            j.update(reports::conic_decomposition(std::get<ConicDecomposition>(res)));
        }
    } else if (mode == "benevolent") {
        auto split = benevolent_split(m);
        j["dw_profile"] = reports::toeplitz_profile(split.dw_profile);
        nlohmann::ordered_json betas;
        for (const auto& [i, beta] : split.betas) betas[std::to_string(i)] = reports::rational(beta);
        j["betas"] = betas;
    } else {
        throw std::invalid_argument("unknown decompose mode '" + mode + "'");
    }
    return j.dump();
}

std::string solve_json(const ExactMatrix& a, const ExactMatrix& b,
                       const std::optional<std::pair<ExactMatrix, ExactMatrix>>& b_split, bool oracle, int max_brute,
                       int threads) {
    nlohmann::ordered_json j;
    auto cert = detect_case(a, b, b_split);
    if (!cert) {
        j["case"] = "none";
    } else {
        j["case"] = std::string(case_name(cert->id));
        j["permutation"] = reports::permutation(cert->optimal_permutation);
        j["value"] = to_string(qap_objective(a, b, cert->optimal_permutation));
        j["evidence"] = cert->evidence;
    }
    if (oracle) {
        BruteForceOptions opt;
        opt.max_n = max_brute;
        opt.threads = threads;
        auto brute = brute_force(a, b, opt);
        j["oracle"] = {{"value", reports::rational(brute.value)},
                       {"permutation", reports::permutation(brute.permutation)}};
        if (cert) j["oracle"]["agree"] = to_string(brute.value) == j["value"].get<std::string>();
    }
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_qaptk, m) {
    m.doc() = "Exact recognizers, decompositions and solvers for structured QAP instances";

    py::class_<ExactMatrix>(m, "Matrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"),
             "Square matrix from rows of exact rational strings (or integers rendered as strings)")
        .def_property_readonly("n", &ExactMatrix::n)
        .def("at", [](const ExactMatrix& m_, int i, int j) { return to_string(m_.at(i, j)); }, py::arg("i"),
             py::arg("j"), "Entry at 1-based (i, j) as a canonical rational string")
        .def("is_symmetric", &ExactMatrix::is_symmetric)
        .def("to_text", [](const ExactMatrix& m_) { return write_matrix(m_); })
        .def("to_rows",
             [](const ExactMatrix& m_) {
                 std::vector<std::vector<std::string>> rows;
                 for (int i = 1; i <= m_.n(); ++i) {
                     std::vector<std::string> row;
                     for (int j = 1; j <= m_.n(); ++j) row.push_back(to_string(m_.at(i, j)));
                     rows.push_back(std::move(row));
                 }
                 return rows;
             })
        .def("__eq__", [](const ExactMatrix& x, const ExactMatrix& y) { return x == y; })
        .def("__add__", [](const ExactMatrix& x, const ExactMatrix& y) { return x + y; })
        .def("__sub__", [](const ExactMatrix& x, const ExactMatrix& y) { return x - y; })
        .def("__neg__", [](const ExactMatrix& x) { return -x; })
        .def("__repr__", [](const ExactMatrix& m_) {
            std::ostringstream os;
            os << "Matrix(n=" << m_.n() << ")";
            return os.str();
        });

    m.def("read_matrix", [](const std::string& path) { return read_matrix_file(path); }, py::arg("path"));
    m.def("parse_matrix", [](const std::string& text) {
        std::istringstream in(text);
        return read_matrix(in);
    });
    m.def("write_matrix", [](const std::string& path, const ExactMatrix& m_) { write_matrix_file(path, m_); });
    m.def("matrix_hash", &matrix_hash);
    m.def("render", &render_heatmap);

    m.def("identity", [](int n) { return Permutation::identity(n).images(); });
    m.def("supnick", [](int n) { return supnick_permutation(n).images(); });
    m.def("cyclic_shift", [](int n, int u) { return cyclic_shift(n, u).images(); });
    m.def("compose", [](const std::vector<int>& p, const std::vector<int>& q) {
        return compose(to_perm(p), to_perm(q)).images();
    });
    m.def("invert", [](const std::vector<int>& p) { return invert(to_perm(p)).images(); });

    m.def("qap_objective", [](const ExactMatrix& a, const ExactMatrix& b, const std::vector<int>& p) {
        return to_string(qap_objective(a, b, to_perm(p)));
    });
    m.def("apply_permutation",
          [](const ExactMatrix& a, const std::vector<int>& p) { return apply_permutation(a, to_perm(p)); });

    m.def("classify_json", &classify_json);
    m.def("decompose_json", &decompose_json, py::arg("matrix"), py::arg("mode"));
    m.def("solve_json", &solve_json, py::arg("a"), py::arg("b"), py::arg("b_split") = std::nullopt,
          py::arg("oracle") = false, py::arg("max_brute") = 10, py::arg("threads") = 1);

    m.def(
        "brute_force",
        [](const ExactMatrix& a, const ExactMatrix& b, bool maximize, int max_n, int threads) {
            BruteForceOptions opt;
            opt.maximize = maximize;
            opt.max_n = max_n;
            opt.threads = threads;
            auto sol = brute_force(a, b, opt);
            return py::make_tuple(sol.permutation.images(), to_string(sol.value));
        },
        py::arg("a"), py::arg("b"), py::arg("maximize") = false, py::arg("max_n") = 10, py::arg("threads") = 1);

    m.def("selection_optimum",
          [](const ExactMatrix& a, int i) { return to_string(selection_optimum(a, i)); });

    m.def("stripe_matrix", &stripe_matrix, py::arg("n"), py::arg("i"));
    m.def("cut_matrix", [](int n, const std::vector<std::pair<int, int>>& blocks) {
        BlockPartition part;
        part.n = n;
        part.blocks = blocks;
        return cut_matrix_from_blocks(part);
    });
    m.def("extremal_anti_monge", &extremal_anti_monge, py::arg("n"), py::arg("p"), py::arg("q"),
          py::arg("symmetric") = true);
    m.def("ps_ray", [](int n, int p, int q, int u, bool cyclic) { return ps_ray(RaySpec{n, p, q, u, cyclic}); },
          py::arg("n"), py::arg("p"), py::arg("q"), py::arg("u") = 1, py::arg("cyclic") = false);

    m.def(
        "generate",
        [](const std::string& klass, int n, std::uint64_t seed) {
            auto inst = random_instance(klass, n, seed);
            return py::make_tuple(inst.matrix, inst.params.dump());
        },
        py::arg("class_name"), py::arg("n"), py::arg("seed") = 0);
    m.def("instance_classes", &random_instance_classes);
}
