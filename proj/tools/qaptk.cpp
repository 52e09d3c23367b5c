#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qap/core.hpp"
#include "qap/decomposition.hpp"
#include "qap/generators.hpp"
#include "qap/io.hpp"
#include "qap/recognizers.hpp"
#include "qap/reports.hpp"
#include "qap/solver.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qap;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;        // "no" / infeasible / none verdicts
constexpr int kExitInputError = 2;

void print_report(const ordered_json& j) { std::cout << j.dump(2) << std::endl; }

int fail_input(const std::string& message) {
    ordered_json j;
    j["error"] = message;
    print_report(j);
    return kExitInputError;
}

int run_classify(const std::string& path, const std::string& only_class) {
    ExactMatrix m = read_matrix_file(path);
    ClassificationReport report = classify(m);
    ordered_json j;
    j["command"] = "classify";
    j["input"] = path;
    j["n"] = m.n();
    j.update(reports::classification(report));
    print_report(j);
    if (only_class.empty()) return kExitOk;
    for (const auto& entry : report.entries) {
        if (entry.name != only_class) continue;
        switch (entry.verdict.state) {
            case Verdict::State::Yes: return kExitOk;
            case Verdict::State::No: return kExitNo;
            case Verdict::State::NotApplicable: return kExitInputError;
        }
    }
    return fail_input("unknown class '" + only_class + "'");
}

ExactMatrix with_diagonal_of(ExactMatrix m, const ExactMatrix& source) {
    for (int i = 1; i <= m.n(); ++i) m.at(i, i) = source.at(i, i);
    return m;
}

int run_decompose(const std::string& mode, const std::string& path) {
    ExactMatrix c = read_matrix_file(path);
    ordered_json j;
    j["command"] = "decompose";
    j["mode"] = mode;
    j["input"] = path;
    j["n"] = c.n();

    if (mode == "benevolent") {
        auto toe = extract_toeplitz_profile(c);
        if (auto* w = std::get_if<Witness>(&toe)) {
            j["verdict"] = "no";
            j["witness"] = reports::witness(*w);
            print_report(j);
            return kExitNo;
        }
        const auto& prof = std::get<ToeplitzProfile>(toe);
        if (!prof.down_benevolent) {
            j["verdict"] = "no";
            j["reason"] = "profile is not down-benevolent";
            j["profile"] = reports::toeplitz_profile(prof);
            print_report(j);
            return kExitNo;
        }
        BenevolentSplit split = benevolent_split(c);
        j["verdict"] = "yes";
        j["dw_profile"] = reports::toeplitz_profile(split.dw_profile);
        ordered_json betas;
        for (const auto& [i, beta] : split.betas) betas[std::to_string(i)] = reports::rational(beta);
        j["betas"] = betas;
        ExactMatrix rebuilt = toeplitz_from_profile(split.dw_profile);
        for (const auto& [i, beta] : split.betas) {
            ExactMatrix t = stripe_matrix(c.n(), i);
            t *= beta;
            rebuilt -= t;
        }
        j["reconstruction_hash"] = matrix_hash(rebuilt);
        j["reconstruction_exact"] = rebuilt == c;
        print_report(j);
        return kExitOk;
    }

    if (!c.is_symmetric()) return fail_input("decompose --mode " + mode + ": input must be symmetric");

    if (mode == "kalmanson") {
        auto kv = check_kalmanson(c);
        if (!kv.yes()) {
            j["verdict"] = "no";
            j["witness"] = reports::witness(*kv.witness);
            print_report(j);
            return kExitNo;
        }
        KalmansonDecomposition dec = kalmanson_decomposition(c);
        j["verdict"] = "yes";
        auto terms = ordered_json::array();
        for (const auto& [kl, w] : dec.delta)
            terms.push_back({{"cut", {kl.first, kl.second}}, {"delta", reports::rational(w)}});
        j["interior_cuts"] = terms;
        auto boundary = ordered_json::array();
        for (const auto& [i, alpha] : dec.alpha)
            boundary.push_back(
                {{"i", i}, {"alpha", reports::rational(alpha)}, {"beta", reports::rational(dec.beta.at(i))}});
        j["boundary_cuts"] = boundary;
        j["residual_gammas"] = reports::rationals(dec.gammas);
        ExactMatrix rebuilt = dec.residual;
        for (const auto& [kl, w] : dec.delta) {
            BlockPartition part;
            part.n = c.n();
            for (int i = 1; i < kl.first; ++i) part.blocks.emplace_back(i, i);
            part.blocks.emplace_back(kl.first, kl.second);
            for (int i = kl.second + 1; i <= c.n(); ++i) part.blocks.emplace_back(i, i);
            ExactMatrix cut = cut_matrix_from_blocks(part);
            cut *= w;
            rebuilt += cut;
        }
        for (const auto& [i, alpha] : dec.alpha) {
            BlockPartition left;
            left.n = c.n();
            left.blocks.emplace_back(1, i);
            for (int t = i + 1; t <= c.n(); ++t) left.blocks.emplace_back(t, t);
            ExactMatrix cl = cut_matrix_from_blocks(left);
            cl *= alpha;
            rebuilt += cl;
            BlockPartition right;
            right.n = c.n();
            for (int t = 1; t <= i; ++t) right.blocks.emplace_back(t, t);
            right.blocks.emplace_back(i + 1, c.n());
            ExactMatrix cr = cut_matrix_from_blocks(right);
            cr *= dec.beta.at(i);
            rebuilt += cr;
        }
        j["reconstruction_hash"] = matrix_hash(rebuilt);
        j["reconstruction_exact"] = rebuilt == c;
        print_report(j);
        return kExitOk;
    }

    if (mode == "robinson-kalmanson" || mode == "cdw") {
        auto rv = check_robinson(c);
        if (!rv.yes()) {
            j["verdict"] = "no";
            j["reason"] = "input is not Robinson";
            j["witness"] = reports::witness(*rv.witness);
            print_report(j);
            return kExitNo;
        }
        auto kv = check_kalmanson(c);
        if (!kv.yes()) {
            j["verdict"] = "no";
            j["reason"] = "input is not Kalmanson";
            j["witness"] = reports::witness(*kv.witness);
            print_report(j);
            return kExitNo;
        }
        if (mode == "robinson-kalmanson") {
            ConicDecomposition dec = robinson_kalmanson_decomposition(c);
            j["verdict"] = "yes";
            j.update(reports::conic_decomposition(dec));
            ExactMatrix rebuilt = with_diagonal_of(dec.reconstruct(), c);
            j["reconstruction_hash"] = matrix_hash(rebuilt);
            j["reconstruction_exact"] = rebuilt == c;
            print_report(j);
            return kExitOk;
        }
        auto result = cdw_decomposition(c);
        if (auto* viol = std::get_if<CdwViolation>(&result)) {
            j["verdict"] = "infeasible";
            j["violated"] = {{"k", viol->k}, {"l", viol->l}};
            print_report(j);
            return kExitNo;
        }
        const auto& dec = std::get<ConicDecomposition>(result);
        j["verdict"] = "yes";
        j.update(reports::conic_decomposition(dec));
        ExactMatrix rebuilt = with_diagonal_of(dec.reconstruct(), c);
        j["reconstruction_hash"] = matrix_hash(rebuilt);
        j["reconstruction_exact"] = rebuilt == c;
        print_report(j);
        return kExitOk;
    }
    return fail_input("unknown decompose mode '" + mode + "'");
}

int run_solve(const std::string& a_path, const std::string& b_path, const std::vector<std::string>& b_split_paths,
              bool oracle, bool forced_oracle, int max_brute, int threads) {
    ExactMatrix a = read_matrix_file(a_path);
    ExactMatrix b = read_matrix_file(b_path);
    std::optional<std::pair<ExactMatrix, ExactMatrix>> b_split;
    if (!b_split_paths.empty()) {
        ExactMatrix b1 = read_matrix_file(b_split_paths[0]);
        ExactMatrix b2 = read_matrix_file(b_split_paths[1]);
        b_split = std::make_pair(std::move(b1), std::move(b2));
    }

    ordered_json j;
    j["command"] = forced_oracle ? "verify" : "solve";
    j["a"] = a_path;
    j["b"] = b_path;
    j["n"] = a.n();

    auto cert = detect_case(a, b, b_split);
    const bool want_oracle = oracle || forced_oracle;
    std::optional<Solution> brute;
    if (want_oracle) {
        if (a.n() > max_brute)
            return fail_input("oracle requested but n = " + std::to_string(a.n()) + " exceeds --max-brute = " +
                              std::to_string(max_brute));
        BruteForceOptions opt;
        opt.max_n = max_brute;
        opt.threads = threads;
        brute = brute_force(a, b, opt);
    }

    if (!cert) {
        j["case"] = "none";
        if (brute) {
            j["oracle"] = {{"value", reports::rational(brute->value)},
                           {"permutation", reports::permutation(brute->permutation)}};
        }
        print_report(j);
        return kExitNo;
    }

    Rat value = qap_objective(a, b, cert->optimal_permutation);
    j["case"] = std::string(case_name(cert->id));
    j["permutation"] = reports::permutation(cert->optimal_permutation);
    j["value"] = to_string(value);
    j["evidence"] = cert->evidence;
    bool agree = true;
    if (brute) {
        agree = brute->value == value;
        j["oracle"] = {{"value", reports::rational(brute->value)},
                       {"permutation", reports::permutation(brute->permutation)},
                       {"agree", agree}};
    }
    print_report(j);
    return agree ? kExitOk : kExitNo;
}

int run_generate(const std::string& klass, int n, std::uint64_t seed, const std::string& out_path, bool with_spec) {
    GeneratedInstance inst = random_instance(klass, n, seed);
    const std::string text = write_matrix(inst.matrix);
    if (out_path.empty()) {
        if (with_spec) return fail_input("--spec requires -o so the matrix and the JSON do not interleave");
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(out_path);
    if (!out) return fail_input("cannot write '" + out_path + "'");
    out << text;
    out.close();
    if (with_spec) {
        ordered_json j;
        j["command"] = "generate";
        j["output"] = out_path;
        j["params"] = inst.params;
        print_report(j);
    }
    return kExitOk;
}

int run_render(const std::string& path) {
    ExactMatrix m = read_matrix_file(path);
    std::cout << render_heatmap(m);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognition, generation, decomposition and exact solving of structured QAP instances"};
    app.require_subcommand(1);

    // classify
    std::string cl_input, cl_class;
    auto* classify_cmd = app.add_subcommand("classify", "Run every matrix-class recognizer and report verdicts");
    classify_cmd->add_option("input", cl_input, "matrix file")->required();
    classify_cmd->add_option("--class", cl_class, "exit by the verdict of this single class");

    // decompose
    std::string dc_mode = "cdw", dc_input;
    auto* decompose_cmd = app.add_subcommand("decompose", "Conic decompositions and the benevolent split");
    decompose_cmd->add_option("--mode", dc_mode, "kalmanson | robinson-kalmanson | cdw | benevolent")
        ->check(CLI::IsMember({"kalmanson", "robinson-kalmanson", "cdw", "benevolent"}));
    decompose_cmd->add_option("input", dc_input, "matrix file")->required();

    // solve / verify
    std::string sv_a, sv_b;
    std::vector<std::string> sv_split;
    bool sv_oracle = false;
    int sv_max_brute = 10;
    int sv_threads = 1;
    auto* solve_cmd = app.add_subcommand("solve", "Detect the applicable theorem and return the optimal permutation");
    solve_cmd->add_option("a", sv_a, "matrix A file")->required();
    solve_cmd->add_option("b", sv_b, "matrix B file")->required();
    solve_cmd->add_option("--b-split", sv_split, "explicit B1 B2 with B1 + B2 = B")->expected(2);
    solve_cmd->add_flag("--oracle", sv_oracle, "cross-check against exhaustive enumeration");
    solve_cmd->add_option("--max-brute", sv_max_brute, "largest n the oracle will enumerate");
    solve_cmd->add_option("--threads", sv_threads, "brute-force workers");

    std::string vf_a, vf_b;
    std::vector<std::string> vf_split;
    int vf_max_brute = 10;
    int vf_threads = 1;
    auto* verify_cmd = app.add_subcommand("verify", "solve with a forced brute-force comparison");
    verify_cmd->add_option("a", vf_a, "matrix A file")->required();
    verify_cmd->add_option("b", vf_b, "matrix B file")->required();
    verify_cmd->add_option("--b-split", vf_split, "explicit B1 B2 with B1 + B2 = B")->expected(2);
    verify_cmd->add_option("--max-brute", vf_max_brute, "largest n the oracle will enumerate");
    verify_cmd->add_option("--threads", vf_threads, "brute-force workers");

    // generate
    std::string gn_class, gn_out;
    int gn_n = 8;
    std::uint64_t gn_seed = 0;
    bool gn_spec = false;
    auto* generate_cmd = app.add_subcommand("generate", "Seeded random member of a matrix class");
    generate_cmd->add_option("--class", gn_class, "class name")->required();
    generate_cmd->add_option("--n", gn_n, "dimension")->required();
    generate_cmd->add_option("--seed", gn_seed, "seed");
    generate_cmd->add_option("-o,--output", gn_out, "output matrix file (default: stdout)");
    generate_cmd->add_flag("--spec", gn_spec, "print the generating parameters as JSON (requires -o)");

    // render
    std::string rd_input;
    auto* render_cmd = app.add_subcommand("render", "ASCII heatmap of a matrix");
    render_cmd->add_option("input", rd_input, "matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(cl_input, cl_class);
        if (decompose_cmd->parsed()) return run_decompose(dc_mode, dc_input);
        if (solve_cmd->parsed()) return run_solve(sv_a, sv_b, sv_split, sv_oracle, false, sv_max_brute, sv_threads);
        if (verify_cmd->parsed()) return run_solve(vf_a, vf_b, vf_split, false, true, vf_max_brute, vf_threads);
        if (generate_cmd->parsed()) return run_generate(gn_class, gn_n, gn_seed, gn_out, gn_spec);
        if (render_cmd->parsed()) return run_render(rd_input);
    } catch (const ParseError& e) {
        return fail_input(e.what());
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    return kExitInputError;
}
