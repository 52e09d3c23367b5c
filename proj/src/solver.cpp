#include "qap/solver.hpp"

#include <algorithm>
#include <thread>

#include "qap/lp.hpp"
#include "qap/reports.hpp"

namespace qap {

namespace {

int half_ceil(int n) { return n / 2; }  // ceil((n-1)/2)

}  // namespace

std::string_view case_name(CaseId id) {
    switch (id) {
        case CaseId::Combined1: return "combined_1";
        case CaseId::Combined2: return "combined_2";
        case CaseId::Combined3: return "combined_3";
        case CaseId::CdwAntiMonge: return "CDW_antimonge";
        case CaseId::DwKalmansonDw: return "DW_kalmanson_dw";
        case CaseId::LsRobinsonSimple: return "LS_robinson_simple";
        case CaseId::DownBenevolent: return "down_benevolent";
        case CaseId::UpBenevolentPs: return "up_benevolent_PS";
        case CaseId::BcrwAntiMongeBenevolent: return "BCRW_antimonge_benevolent";
        case CaseId::PsMongeDownBenevolent: return "PSmonge_down_benevolent";
    }
    return "unknown";
}

namespace {

struct BruteState {
    const ExactMatrix* a;
    const ExactMatrix* b;
    bool maximize;
    int n;
    std::vector<int> perm;       // perm[pos-1] = value at position pos
    std::vector<char> used;      // 1-based
    std::vector<Rat> partial;    // partial[k] = objective of the first k rows/cols
    std::optional<Rat> best;
    std::vector<int> best_perm;

    bool better(const Rat& v) const { return maximize ? v > *best : v < *best; }

    void dfs(int pos) {
        if (pos > n) {
            const Rat& v = partial[static_cast<std::size_t>(n)];
            if (!best || better(v)) {
                best = v;
                best_perm = perm;
            }
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            place(pos, v);
            dfs(pos + 1);
            used[v] = 0;
        }
    }

    void place(int pos, int v) {
        Rat delta = partial[static_cast<std::size_t>(pos - 1)];
        Rat term = a->at(v, v);
        term *= b->at(pos, pos);
        delta += term;
        for (int t = 1; t < pos; ++t) {
            const int w = perm[static_cast<std::size_t>(t - 1)];
            term = a->at(w, v);
            term *= b->at(t, pos);
            delta += term;
            term = a->at(v, w);
            term *= b->at(pos, t);
            delta += term;
        }
        perm[static_cast<std::size_t>(pos - 1)] = v;
        used[v] = 1;
        partial[static_cast<std::size_t>(pos)] = delta;
    }
};

}  // namespace

Solution brute_force(const ExactMatrix& a, const ExactMatrix& b, const BruteForceOptions& options) {
    if (a.n() != b.n()) throw std::invalid_argument("brute_force: dimension mismatch");
    const int n = a.n();
    if (n > options.max_n)
        throw std::invalid_argument("brute_force: n = " + std::to_string(n) + " exceeds max_n = " +
                                    std::to_string(options.max_n));
    const int workers = std::max(1, std::min(options.threads, n));

    auto run_branch = [&](int first_value_mod, BruteState& st) {
        st.a = &a;
        st.b = &b;
        st.maximize = options.maximize;
        st.n = n;
        st.perm.assign(static_cast<std::size_t>(n), 0);
        st.used.assign(static_cast<std::size_t>(n + 1), 0);
        st.partial.assign(static_cast<std::size_t>(n + 1), Rat(0));
        for (int v = 1; v <= n; ++v) {
            if ((v - 1) % workers != first_value_mod) continue;
            st.place(1, v);
            st.dfs(2);
            st.used[v] = 0;
        }
    };

    std::vector<BruteState> states(static_cast<std::size_t>(workers));
    if (workers == 1) {
        run_branch(0, states[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back([&, w] { run_branch(w, states[static_cast<std::size_t>(w)]); });
        for (auto& t : pool) t.join();
    }

    // Deterministic reduce: best value first, then lexicographically smallest
    // permutation; independent of the worker count.
    const BruteState* winner = nullptr;
    for (const auto& st : states) {
        if (!st.best) continue;
        if (!winner || (st.maximize ? *st.best > *winner->best : *st.best < *winner->best) ||
            (*st.best == *winner->best && st.best_perm < winner->best_perm))
            winner = &st;
    }
    if (!winner) throw std::logic_error("brute_force: empty search");
    nlohmann::ordered_json cert;
    cert["type"] = "brute_force";
    if (options.maximize) cert["maximize"] = true;
    return Solution{Permutation(winner->best_perm), *winner->best, std::move(cert)};
}

Rat selection_optimum(const ExactMatrix& a, int i) {
    if (!a.is_symmetric()) throw std::invalid_argument("selection_optimum: input must be symmetric");
    const int n = a.n();
    if (!(half_ceil(n) < i && i <= n - 1)) throw std::invalid_argument("selection_optimum: i out of range");
    const int k = n - i;
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    std::optional<Rat> best;
    Rat current = 0;
    // Enumerate k vertex-disjoint above-diagonal entries; pairs are chosen
    // with strictly increasing row index, which visits each set once.
    auto rec = [&](auto&& self, int min_row, int remaining) -> void {
        if (remaining == 0) {
            if (!best || current > *best) best = current;
            return;
        }
        for (int r = min_row; r <= n; ++r) {
            if (used[r]) continue;
            for (int c = r + 1; c <= n; ++c) {
                if (used[c]) continue;
                used[r] = used[c] = 1;
                current += a.at(r, c);
                self(self, r + 1, remaining - 1);
                current -= a.at(r, c);
                used[r] = used[c] = 0;
            }
        }
    };
    rec(rec, 1, k);
    if (!best) throw std::logic_error("selection_optimum: no feasible selection");
    return *best;
}

std::optional<Combined1Split> split_combined1(const ExactMatrix& b) {
    if (!b.is_symmetric()) return std::nullopt;
    const int n = b.n();
    for (int i = 1; i <= n; ++i)
        if (b.at(i, i) < 0) return std::nullopt;  // B1 inherits the diagonal
    if (n == 1) {
        Combined1Split out{b, ExactMatrix(1), ToeplitzProfile::zero(1)};
        return out;
    }

    // Variables f_1..f_{n-1} (profile of the down-benevolent part); all
    // constraint families collapse to one inequality per diagonal offset
    // because the Toeplitz side depends only on |i-j|.
    const int vars = n - 1;
    std::vector<lp::Constraint> cons;
    auto coef_row = [&]() { return std::vector<Rat>(static_cast<std::size_t>(vars), Rat(0)); };
    auto add_var = [&](std::vector<Rat>& row, int d, const Rat& c) {
        if (d == 0) return;  // f(0) = 0
        row[static_cast<std::size_t>(d - 1)] += c;
    };

    // Nonnegativity of B1: f_d <= min_{|i-j|=d} B[i,j].
    for (int d = 1; d <= n - 1; ++d) {
        Rat m = b.at(1, 1 + d);
        for (int i = 1; i + d <= n; ++i) m = std::min(m, b.at(i, i + d));
        auto row = coef_row();
        add_var(row, d, 1);
        cons.push_back({std::move(row), lp::Rel::Le, m});
    }
    // Row monotonicity of B1: f_{|e+1|} - f_{|e|} <= min_i (B[i,i+e+1] - B[i,i+e]).
    for (int e = -(n - 1); e <= n - 2; ++e) {
        std::optional<Rat> m;
        for (int i = 1; i <= n; ++i) {
            const int j = i + e;
            if (j < 1 || j + 1 > n) continue;
            Rat v = b.at(i, j + 1) - b.at(i, j);
            if (!m || v < *m) m = v;
        }
        if (!m) continue;
        auto row = coef_row();
        add_var(row, std::abs(e + 1), 1);
        add_var(row, std::abs(e), -1);
        cons.push_back({std::move(row), lp::Rel::Le, *m});
    }
    // Adjacent anti-Monge of B1: 2f_{|d|} - f_{|d-1|} - f_{|d+1|} <= min QB.
    for (int d = 0; d <= n - 2; ++d) {
        std::optional<Rat> m;
        for (int i = 1; i <= n - 1; ++i) {
            const int j = i - d;
            if (j < 1 || j > n - 1) continue;
            Rat v = b.at(i, j) + b.at(i + 1, j + 1) - b.at(i, j + 1) - b.at(i + 1, j);
            if (!m || v < *m) m = v;
        }
        if (!m) continue;
        auto row = coef_row();
        add_var(row, d, 2);
        add_var(row, std::abs(d - 1), -1);
        add_var(row, d + 1, -1);
        cons.push_back({std::move(row), lp::Rel::Le, *m});
    }
    // Down-benevolence of f.
    const int m_half = half_ceil(n);
    for (int d = 1; d <= m_half - 1; ++d) {
        auto row = coef_row();
        add_var(row, d + 1, 1);
        add_var(row, d, -1);
        cons.push_back({std::move(row), lp::Rel::Le, Rat(0)});
    }
    for (int d = 1; d <= m_half; ++d) {
        if (n - d == d) continue;
        auto row = coef_row();
        add_var(row, n - d, 1);
        add_var(row, d, -1);
        cons.push_back({std::move(row), lp::Rel::Le, Rat(0)});
    }

    auto sol = lp::find_feasible(vars, 0, cons);
    if (!sol) return std::nullopt;

    ToeplitzProfile prof = ToeplitzProfile::zero(n);
    for (int d = 1; d <= n - 1; ++d) {
        prof.at(d) = (*sol)[static_cast<std::size_t>(d - 1)];
        prof.at(-d) = prof.at(d);
    }
    prof.recompute_flags();
    ExactMatrix b2 = toeplitz_from_profile(prof);
    ExactMatrix b1 = b - b2;
    if (!prof.down_benevolent || !check_monge_family(b1, MongeVariant::MonotoneAntiMonge).yes())
        throw std::logic_error("split_combined1: feasible point violates the target classes");
    return Combined1Split{std::move(b1), std::move(b2), std::move(prof)};
}

nlohmann::ordered_json PsMembership::to_json() const {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : terms)
        arr.push_back({{"p", t.spec.p}, {"q", t.spec.q}, {"u", t.spec.u}, {"weight", reports::rational(t.weight)}});
    j["terms"] = arr;
    if (constant) j["constant"] = reports::rational(*constant);
    if (sum_alpha) j["sum_alpha"] = reports::rationals(*sum_alpha);
    if (sum_beta) j["sum_beta"] = reports::rationals(*sum_beta);
    return j;
}

ExactMatrix PsMembership::reconstruct(int n) const {
    ExactMatrix acc(n);
    for (const auto& t : terms) {
        ExactMatrix ray = ps_ray(t.spec);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) acc.at(i, j) += t.weight * ray.at(i, j);
    }
    if (!constant && !sum_alpha) return acc;
    ExactMatrix m = -acc;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (constant) m.at(i, j) += *constant;
            if (sum_alpha) m.at(i, j) += (*sum_alpha)[i - 1] + (*sum_beta)[j - 1];
        }
    return m;
}

std::optional<PsMembership> ps_cone_membership(const ExactMatrix& a, PsCone cone) {
    const int n = a.n();
    const bool cyclic = cone == PsCone::CyclicMonge;
    const bool negated = cone != PsCone::AntiMonge;
    // The cyclic Monge cone carries an arbitrary sum part, which may be
    // asymmetric; the other two cones are symmetric.
    if (!cyclic && !a.is_symmetric()) return std::nullopt;
    if (cone == PsCone::AntiMonge) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j && a.at(i, j) < 0) return std::nullopt;  // rays are nonnegative
    }

    // Enumerate the ray family once.
    struct Ray {
        RaySpec spec;
        ExactMatrix m;
    };
    std::vector<Ray> rays;
    for (int p = 1; p <= n; ++p)
        for (int q = p; q <= n; ++q)
            for (int u : RaySpec::admissible_shifts(n, p, q, cyclic)) {
                RaySpec spec{n, p, q, u, cyclic};
                rays.push_back({spec, ps_ray(spec)});
            }

    // Off-diagonal equations: sum_r w_r ray[i,j] (- c | - alpha_i - beta_j)
    // = (+-) a[i,j]. Free variables first, then the nonnegative weights.
    // Symmetric cones only need the upper triangle; the cyclic cone equates
    // both triangles because the sum part need not be symmetric.
    const int num_free = cone == PsCone::Monge ? 1 : (cyclic ? 2 * n : 0);
    const int num_w = static_cast<int>(rays.size());
    std::vector<lp::Constraint> cons;
    for (int i = 1; i <= n; ++i)
        for (int j = cyclic ? 1 : i + 1; j <= n; ++j) {
            if (i == j) continue;
            lp::Constraint c;
            c.coef.assign(static_cast<std::size_t>(num_free + num_w), Rat(0));
            if (cone == PsCone::Monge) c.coef[0] = -1;
            if (cyclic) {
                c.coef[static_cast<std::size_t>(i - 1)] -= 1;      // alpha_i
                c.coef[static_cast<std::size_t>(n + j - 1)] -= 1;  // beta_j
            }
            for (int r = 0; r < num_w; ++r) c.coef[static_cast<std::size_t>(num_free + r)] = rays[r].m.at(i, j);
            c.rel = lp::Rel::Eq;
            c.rhs = negated ? Rat(-a.at(i, j)) : a.at(i, j);
            cons.push_back(std::move(c));
        }
    auto sol = lp::find_feasible(num_free, num_w, cons);
    if (!sol) return std::nullopt;

    PsMembership out;
    for (int r = 0; r < num_w; ++r) {
        const Rat& w = (*sol)[static_cast<std::size_t>(num_free + r)];
        if (w > 0) out.terms.push_back({w, rays[r].spec});
    }
    if (cone == PsCone::Monge) out.constant = (*sol)[0];
    if (cyclic) {
        out.sum_alpha = std::vector<Rat>(sol->begin(), sol->begin() + n);
        out.sum_beta = std::vector<Rat>(sol->begin() + n, sol->begin() + 2 * n);
    }
    return out;
}

namespace {

struct ToeplitzFacts {
    bool is_toeplitz = false;
    ToeplitzProfile profile;
};

ToeplitzFacts toeplitz_facts(const ExactMatrix& m) {
    ToeplitzFacts f;
    auto r = extract_toeplitz_profile(m);
    if (auto* p = std::get_if<ToeplitzProfile>(&r)) {
        f.is_toeplitz = true;
        f.profile = *p;
    }
    return f;
}

}  // namespace

std::optional<CaseCertificate> detect_case(const ExactMatrix& a, const ExactMatrix& b,
                                           const std::optional<std::pair<ExactMatrix, ExactMatrix>>& b_split) {
    if (a.n() != b.n()) throw std::invalid_argument("detect_case: dimension mismatch");
    const int n = a.n();
    if (b_split) {
        if (b_split->first.n() != n || b_split->second.n() != n)
            throw std::invalid_argument("detect_case: b_split dimension mismatch");
        if (b_split->first + b_split->second != b)
            throw std::invalid_argument("detect_case: b_split does not sum to B");
    }

    const bool a_sym = a.is_symmetric();
    const bool b_sym = b.is_symmetric();
    const auto a_toe = a_sym ? toeplitz_facts(a) : ToeplitzFacts{};
    const auto b_toe = b_sym ? toeplitz_facts(b) : ToeplitzFacts{};
    const bool a_robinson = a_sym && check_robinson(a).yes();
    const bool a_kalmanson = a_sym && check_kalmanson(a).yes();

    const Permutation id = Permutation::identity(n);

    // combined_1: A = weak constant + conic CDW cuts (needs Robinson and
    // Kalmanson); B = monotone anti-Monge + down-benevolent Toeplitz.
    if (a_robinson && a_kalmanson && a.has_constant_diagonal() && b_sym) {
        auto cdw = cdw_decomposition(a);
        if (auto* dec = std::get_if<ConicDecomposition>(&cdw)) {
            nlohmann::ordered_json evidence;
            evidence["a"] = {{"robinson", "yes"}, {"kalmanson", "yes"}, {"cdw", reports::conic_decomposition(*dec)}};
            bool matched = false;
            if (b_split) {
                const auto& [b1, b2] = *b_split;
                auto b2_toe = toeplitz_facts(b2);
                if (check_monge_family(b1, MongeVariant::MonotoneAntiMonge).yes() && b2_toe.is_toeplitz &&
                    b2_toe.profile.down_benevolent) {
                    evidence["b"] = {{"split_source", "provided"},
                                     {"b1_monotone_anti_monge", "yes"},
                                     {"b2_profile", reports::toeplitz_profile(b2_toe.profile)}};
                    matched = true;
                }
            }
            if (!matched) {
                if (auto split = split_combined1(b)) {
                    evidence["b"] = {{"split_source", "auto"},
                                     {"b1_monotone_anti_monge", "yes"},
                                     {"b2_profile", reports::toeplitz_profile(split->profile)}};
                    matched = true;
                }
            }
            if (matched) return CaseCertificate{CaseId::Combined1, id, std::move(evidence)};
        }
    }

    // combined_2: A down-benevolent Toeplitz; B = PS monotone Monge +
    // (Kalmanson and Robinson). Requires an explicit split.
    if (b_split && a_toe.is_toeplitz && a_toe.profile.down_benevolent) {
        const auto& [b1, b2] = *b_split;
        if (b2.is_symmetric() && check_robinson(b2).yes() && check_kalmanson(b2).yes()) {
            if (auto membership = ps_cone_membership(b1, PsCone::Monge)) {
                nlohmann::ordered_json evidence;
                evidence["a"] = {{"down_benevolent_profile", reports::toeplitz_profile(a_toe.profile)}};
                evidence["b"] = {{"split_source", "provided"},
                                 {"b1_ps_monge", membership->to_json()},
                                 {"b2_robinson", "yes"},
                                 {"b2_kalmanson", "yes"}};
                return CaseCertificate{CaseId::Combined2, id, std::move(evidence)};
            }
        }
    }

    // combined_3: A DW-Toeplitz; B = cyclic PS monotone Monge + Kalmanson.
    if (b_split && a_toe.is_toeplitz && a_toe.profile.dw) {
        const auto& [b1, b2] = *b_split;
        if (b2.is_symmetric() && check_kalmanson(b2).yes()) {
            if (auto membership = ps_cone_membership(b1, PsCone::CyclicMonge)) {
                nlohmann::ordered_json evidence;
                evidence["a"] = {{"dw_profile", reports::toeplitz_profile(a_toe.profile)}};
                evidence["b"] = {{"split_source", "provided"},
                                 {"b1_cyclic_ps_monge", membership->to_json()},
                                 {"b2_kalmanson", "yes"}};
                return CaseCertificate{CaseId::Combined3, id, std::move(evidence)};
            }
        }
    }

    // CDW_antimonge: A CDW-conic, B monotone anti-Monge.
    if (a_robinson && a_kalmanson && a.has_constant_diagonal() &&
        check_monge_family(b, MongeVariant::MonotoneAntiMonge).yes()) {
        auto cdw = cdw_decomposition(a);
        if (auto* dec = std::get_if<ConicDecomposition>(&cdw)) {
            nlohmann::ordered_json evidence;
            evidence["a"] = {{"robinson", "yes"}, {"kalmanson", "yes"}, {"cdw", reports::conic_decomposition(*dec)}};
            evidence["b"] = {{"monotone_anti_monge", "yes"}};
            return CaseCertificate{CaseId::CdwAntiMonge, id, std::move(evidence)};
        }
    }

    // DW_kalmanson_dw.
    if (a_kalmanson && b_toe.is_toeplitz && b_toe.profile.dw) {
        nlohmann::ordered_json evidence;
        evidence["a"] = {{"kalmanson", "yes"}};
        evidence["b"] = {{"dw_profile", reports::toeplitz_profile(b_toe.profile)}};
        return CaseCertificate{CaseId::DwKalmansonDw, id, std::move(evidence)};
    }

    // LS_robinson_simple.
    if (a_robinson && b_toe.is_toeplitz && b_toe.profile.simple) {
        nlohmann::ordered_json evidence;
        evidence["a"] = {{"robinson", "yes"}};
        evidence["b"] = {{"simple_profile", reports::toeplitz_profile(b_toe.profile)}};
        return CaseCertificate{CaseId::LsRobinsonSimple, id, std::move(evidence)};
    }

    // down_benevolent.
    if (a_robinson && a_kalmanson && b_toe.is_toeplitz && b_toe.profile.down_benevolent) {
        nlohmann::ordered_json evidence;
        evidence["a"] = {{"robinson", "yes"}, {"kalmanson", "yes"}};
        evidence["b"] = {{"down_benevolent_profile", reports::toeplitz_profile(b_toe.profile)}};
        return CaseCertificate{CaseId::DownBenevolent, id, std::move(evidence)};
    }

    // up_benevolent_PS and BCRW share the up-benevolent B.
    if (b_toe.is_toeplitz && b_toe.profile.up_benevolent) {
        if (a_sym) {
            if (auto membership = ps_cone_membership(a, PsCone::AntiMonge)) {
                nlohmann::ordered_json evidence;
                evidence["a"] = {{"ps_anti_monge", membership->to_json()}};
                evidence["b"] = {{"up_benevolent_profile", reports::toeplitz_profile(b_toe.profile)}};
                return CaseCertificate{CaseId::UpBenevolentPs, id, std::move(evidence)};
            }
        }
        if (check_monge_family(a, MongeVariant::MonotoneAntiMonge).yes()) {
            nlohmann::ordered_json evidence;
            evidence["a"] = {{"monotone_anti_monge", "yes"}};
            evidence["b"] = {{"up_benevolent_profile", reports::toeplitz_profile(b_toe.profile)}};
            return CaseCertificate{CaseId::BcrwAntiMongeBenevolent, supnick_permutation(n), std::move(evidence)};
        }
    }

    // PSmonge_down_benevolent.
    if (a_sym && b_toe.is_toeplitz && b_toe.profile.down_benevolent) {
        if (auto membership = ps_cone_membership(a, PsCone::Monge)) {
            nlohmann::ordered_json evidence;
            evidence["a"] = {{"ps_monge", membership->to_json()}};
            evidence["b"] = {{"down_benevolent_profile", reports::toeplitz_profile(b_toe.profile)}};
            return CaseCertificate{CaseId::PsMongeDownBenevolent, id, std::move(evidence)};
        }
    }

    return std::nullopt;
}

Solution solve_structured(const ExactMatrix& a, const ExactMatrix& b,
                          const std::optional<std::pair<ExactMatrix, ExactMatrix>>& b_split) {
    auto cert = detect_case(a, b, b_split);
    if (!cert) throw std::runtime_error("solve_structured: no solvable case detected");
    Solution sol{cert->optimal_permutation, qap_objective(a, b, cert->optimal_permutation), {}};
    sol.certificate["type"] = "case";
    sol.certificate["case"] = std::string(case_name(cert->id));
    sol.certificate["evidence"] = cert->evidence;
    return sol;
}

}  // namespace qap
