#include "qap/decomposition.hpp"

#include <algorithm>

namespace qap {

namespace {

int half_ceil(int n) { return n / 2; }  // ceil((n-1)/2) for n >= 1

BlockPartition single_interval_partition(int n, int k, int l) {
    BlockPartition part;
    part.n = n;
    for (int i = 1; i < k; ++i) part.blocks.emplace_back(i, i);
    part.blocks.emplace_back(k, l);
    for (int i = l + 1; i <= n; ++i) part.blocks.emplace_back(i, i);
    return part;
}

// Adds weight * A^(k,l) into m (0 inside {k..l} and on singletons, 1 across).
void add_cut(ExactMatrix& m, int k, int l, const Rat& weight) {
    const int n = m.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const bool inside = k <= i && i <= l && k <= j && j <= l;
            if (!inside) m.at(i, j) += weight;
        }
}

}  // namespace

bool CutWeightMatrix::all_nonnegative() const {
    for (const auto& v : d)
        if (v < 0) return false;
    return true;
}

std::vector<std::pair<std::pair<int, int>, Rat>> CutWeightMatrix::positive_entries() const {
    std::vector<std::pair<std::pair<int, int>, Rat>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (at(i, j) > 0) out.push_back({{i, j}, at(i, j)});
    return out;
}

CutWeightMatrix cut_weight_matrix(const ExactMatrix& c) {
    if (!c.is_symmetric()) throw std::invalid_argument("cut_weight_matrix: input must be symmetric");
    const int n = c.n();
    if (n < 4) throw std::invalid_argument("cut_weight_matrix: n must be >= 4");
    CutWeightMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n + 1) * (n + 1), Rat(0));
    for (int i = 2; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            dm.at(i, j) = c.at(i - 1, j) + c.at(i, j + 1) - c.at(i, j) - c.at(i - 1, j + 1);
    for (int i = 2; i <= n - 1; ++i) {
        dm.at(1, i) = c.at(i + 1, 1) - c.at(i, 1);
        dm.at(i, n) = c.at(i - 1, n) - c.at(i, n);
    }
    return dm;
}

Rat CutWeightMultigraph::entering_at_least(int node, int length) const {
    Rat total = 0;
    for (const auto& [edge, m] : mult)
        if (edge.second == node && edge.second - edge.first >= length) total += m;
    return total;
}

Rat CutWeightMultigraph::leaving_at_least(int node, int length) const {
    Rat total = 0;
    for (const auto& [edge, m] : mult)
        if (edge.first == node && edge.second - edge.first >= length) total += m;
    return total;
}

CutWeightMultigraph build_multigraph(const CutWeightMatrix& d) {
    CutWeightMultigraph g;
    g.nodes = d.n + 1;
    for (const auto& [cell, w] : d.positive_entries()) g.mult[{cell.first, cell.second + 1}] = w;
    return g;
}

KalmansonDecomposition kalmanson_decomposition(const ExactMatrix& c) {
    auto kv = check_kalmanson(c);
    if (!kv.yes())
        throw std::invalid_argument("kalmanson_decomposition: input is not Kalmanson (" +
                                    (kv.witness ? kv.witness->inequality : kv.reason) + ")");
    const int n = c.n();
    KalmansonDecomposition out{{}, {}, {}, ExactMatrix(n), {}};
    ExactMatrix s = c;
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            Rat d = c.at(i, j) + c.at(i + 1, j + 1) - c.at(i, j + 1) - c.at(i + 1, j);
            if (d != 0) {
                out.delta[{i + 1, j}] = d;
                add_cut(s, i + 1, j, -d);
            }
        }
    for (int i = 2; i <= n - 2; ++i) {
        Rat a = c.at(i + 1, 1) - c.at(i, 1);
        Rat b = c.at(i, n) - c.at(i + 1, n);
        // Boundary pairs are peeled only where the corresponding adjacent
        // inequality is strict (a + b > 0); a + b = 0 pairs belong to the
        // weak-sum residual.
        if (a + b > 0) {
            add_cut(s, 1, i, -a);
            add_cut(s, i + 1, n, -b);
            out.alpha[i] = a;
            out.beta[i] = b;
        }
    }
    out.residual = s;
    auto ws = weak_sum_parameters(s);
    if (auto* g = std::get_if<std::vector<Rat>>(&ws)) {
        out.gammas = *g;
    } else {
        throw std::logic_error("kalmanson_decomposition: residual is not weak-sum");
    }
    return out;
}

ExactMatrix ConicDecomposition::reconstruct() const {
    if (n < 1) throw std::logic_error("reconstruct: dimension not set");
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m.at(i, j) = residual_gammas ? (*residual_gammas)[i - 1] + (*residual_gammas)[j - 1] : offset;
    for (const auto& [w, part] : terms) {
        std::vector<int> block_of(static_cast<std::size_t>(n + 1));
        for (std::size_t b = 0; b < part.blocks.size(); ++b)
            for (int i = part.blocks[b].first; i <= part.blocks[b].second; ++i) block_of[i] = static_cast<int>(b);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j && block_of[i] != block_of[j]) m.at(i, j) += w;
    }
    return m;
}

ConicDecomposition robinson_kalmanson_decomposition(const ExactMatrix& c) {
    auto rv = check_robinson(c);
    if (!rv.yes())
        throw std::invalid_argument("robinson_kalmanson_decomposition: input is not Robinson (" +
                                    (rv.witness ? rv.witness->inequality : rv.reason) + ")");
    auto kv = check_kalmanson(c);
    if (!kv.yes())
        throw std::invalid_argument("robinson_kalmanson_decomposition: input is not Kalmanson (" +
                                    (kv.witness ? kv.witness->inequality : kv.reason) + ")");
    const int n = c.n();
    ConicDecomposition out;
    out.n = n;
    ExactMatrix residual = c;
    auto push = [&](int k, int l, Rat w) {
        if (w == 0) return;
        if (w < 0) throw std::logic_error("robinson_kalmanson_decomposition: negative cut weight");
        add_cut(residual, k, l, -w);
        out.terms.push_back({w, single_interval_partition(n, k, l)});
    };
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            push(i + 1, j, c.at(i, j) + c.at(i + 1, j + 1) - c.at(i, j + 1) - c.at(i + 1, j));
    for (int i = 2; i <= n - 1; ++i) push(1, i, c.at(i + 1, 1) - c.at(i, 1));
    for (int i = 1; i <= n - 2; ++i) push(i + 1, n, c.at(i, n) - c.at(i + 1, n));
    // Residual must be weak-constant.
    out.offset = n >= 2 ? residual.at(1, 2) : Rat(0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && residual.at(i, j) != out.offset)
                throw std::logic_error("robinson_kalmanson_decomposition: residual is not weak-constant");
    return out;
}

std::variant<std::vector<Rat>, Witness> weak_sum_parameters(const ExactMatrix& c) {
    if (!c.is_symmetric()) throw std::invalid_argument("weak_sum_parameters: input must be symmetric");
    const int n = c.n();
    // All adjacent Kalmanson inequalities must hold with equality.
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            if (c.at(i, j + 1) + c.at(i + 1, j) != c.at(i, j) + c.at(i + 1, j + 1))
                return Witness{{i, j},
                               "c[" + std::to_string(i) + "," + std::to_string(j + 1) + "]+c[" + std::to_string(i + 1) +
                                   "," + std::to_string(j) + "] = c[" + std::to_string(i) + "," + std::to_string(j) +
                                   "]+c[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]"};
    for (int i = 2; i <= n - 2; ++i)
        if (c.at(i, 1) + c.at(i + 1, n) != c.at(i, n) + c.at(i + 1, 1))
            return Witness{{i},
                           "c[" + std::to_string(i) + ",1]+c[" + std::to_string(i + 1) + "," + std::to_string(n) +
                               "] = c[" + std::to_string(i) + "," + std::to_string(n) + "]+c[" + std::to_string(i + 1) +
                               ",1]"};
    std::vector<Rat> gamma(static_cast<std::size_t>(n));
    if (n == 1) return gamma;
    if (n == 2) {
        gamma[0] = c.at(1, 2) / 2;
        gamma[1] = c.at(1, 2) / 2;
        return gamma;
    }
    // b_i = c[i+1,j] - c[i,j], common over admissible j; the equalities above
    // make any j work, j chosen off both rows.
    std::vector<Rat> b(static_cast<std::size_t>(n));  // b[i] for i = 1..n-1
    for (int i = 1; i <= n - 1; ++i) {
        const int j = i >= 2 ? 1 : n;  // j not in {i, i+1}
        b[i] = c.at(i + 1, j) - c.at(i, j);
    }
    Rat base = (c.at(1, 2) - b[1]) / 2;
    Rat acc = 0;
    for (int i = 1; i <= n; ++i) {
        gamma[i - 1] = base + acc;
        if (i <= n - 1) acc += b[i];
    }
    // The construction is exact when the equalities hold; verify anyway.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (c.at(i, j) != gamma[i - 1] + gamma[j - 1])
                return Witness{{i, j},
                               "c[" + std::to_string(i) + "," + std::to_string(j) + "] = gamma[" + std::to_string(i) +
                                   "]+gamma[" + std::to_string(j) + "]"};
    return gamma;
}

std::optional<CdwViolation> cdw_feasibility(const CutWeightMatrix& d) {
    if (!d.all_nonnegative()) throw std::invalid_argument("cdw_feasibility: negative cut-weight coefficient");
    const int n = d.n;
    // k runs through n-1: the inequalities for k = n-1 have empty right-hand
    // sums and pin down the cuts that would end at n-1 (no CDW cut does).
    for (int k = 2; k <= n - 1; ++k) {
        for (int l = 1; l <= k - 1; ++l) {
            Rat lhs = 0;
            for (int i = 1; i <= l; ++i) lhs += d.at(i, k);
            Rat rhs = 0;
            for (int j = 2 * k + 1 - l; j <= n; ++j) rhs += d.at(k + 1, j);
            if (lhs > rhs) return CdwViolation{k, l};
        }
    }
    return std::nullopt;
}

std::variant<ConicDecomposition, CdwViolation> cdw_decomposition(const ExactMatrix& c) {
    auto rv = check_robinson(c);
    if (!rv.yes())
        throw std::invalid_argument("cdw_decomposition: input is not Robinson (" +
                                    (rv.witness ? rv.witness->inequality : rv.reason) + ")");
    auto kv = check_kalmanson(c);
    if (!kv.yes())
        throw std::invalid_argument("cdw_decomposition: input is not Kalmanson (" +
                                    (kv.witness ? kv.witness->inequality : kv.reason) + ")");
    const int n = c.n();

    ConicDecomposition out;
    out.n = n;
    ExactMatrix residual = c;

    if (n >= 4) {
        CutWeightMatrix d = cut_weight_matrix(c);
        if (auto viol = cdw_feasibility(d)) return *viol;
        CutWeightMultigraph g = build_multigraph(d);
        // Repeatedly peel a path ending at node n+1. At the path end pick the
        // longest entering edge; at every earlier node pick the longest
        // entering edge whose length does not exceed the edge just taken
        // (ties are impossible: entering edges of one node have distinct
        // tails, hence distinct lengths).
        while (true) {
            int node = n + 1;
            std::vector<int> path{node};
            long prev_len = n + 1;  // effectively unbounded for the first pick
            while (true) {
                int best_tail = -1;
                for (const auto& [edge, m] : g.mult) {
                    if (edge.second != node) continue;
                    const int len = edge.second - edge.first;
                    if (len > prev_len) continue;
                    if (best_tail < 0 || edge.first < best_tail) best_tail = edge.first;
                }
                if (best_tail < 0) break;
                prev_len = node - best_tail;
                node = best_tail;
                path.push_back(node);
            }
            if (path.size() == 1) break;  // no edge enters n+1
            std::reverse(path.begin(), path.end());
            Rat weight;
            bool first = true;
            for (std::size_t t = 0; t + 1 < path.size(); ++t) {
                const Rat& m = g.mult.at({path[t], path[t + 1]});
                if (first || m < weight) weight = m;
                first = false;
            }
            for (std::size_t t = 0; t + 1 < path.size(); ++t) {
                auto it = g.mult.find({path[t], path[t + 1]});
                it->second -= weight;
                if (it->second == 0) g.mult.erase(it);
            }
            BlockPartition part;
            part.n = n;
            for (int i = 1; i < path.front(); ++i) part.blocks.emplace_back(i, i);
            for (std::size_t t = 0; t + 1 < path.size(); ++t)
                part.blocks.emplace_back(path[t], path[t + 1] - 1);
            std::vector<int> block_of(static_cast<std::size_t>(n + 1));
            for (std::size_t bidx = 0; bidx < part.blocks.size(); ++bidx)
                for (int i = part.blocks[bidx].first; i <= part.blocks[bidx].second; ++i)
                    block_of[i] = static_cast<int>(bidx);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i != j && block_of[i] != block_of[j]) residual.at(i, j) -= weight;
            out.terms.push_back({weight, std::move(part)});
        }
        if (!g.mult.empty()) throw std::logic_error("cdw_decomposition: peeling left a non-empty multigraph");
    } else if (n == 3) {
        // The only CDW interval cut is A^(2,3); feasibility needs c12 = c13.
        if (c.at(1, 2) != c.at(1, 3)) return CdwViolation{2, 1};
        Rat w = c.at(1, 2) - c.at(2, 3);
        if (w < 0) throw std::logic_error("cdw_decomposition: negative weight at n=3");
        if (w > 0) {
            BlockPartition part;
            part.n = 3;
            part.blocks = {{1, 1}, {2, 3}};
            out.terms.push_back({w, part});
            residual.at(1, 2) -= w;
            residual.at(2, 1) -= w;
            residual.at(1, 3) -= w;
            residual.at(3, 1) -= w;
        }
    }
    // n <= 2: every symmetric matrix is weak-constant, nothing to peel.

    out.offset = n >= 2 ? residual.at(1, 2) : Rat(0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && residual.at(i, j) != out.offset)
                throw std::logic_error("cdw_decomposition: residual is not weak-constant");
    return out;
}

BenevolentSplit benevolent_split(const ExactMatrix& b) {
    auto toe = extract_toeplitz_profile(b);
    auto* profile = std::get_if<ToeplitzProfile>(&toe);
    if (!profile || !profile->down_benevolent)
        throw std::invalid_argument("benevolent_split: input is not a down-benevolent Toeplitz matrix");
    const int n = b.n();
    const int m = half_ceil(n);
    BenevolentSplit out;
    out.dw_profile = ToeplitzProfile::zero(n);
    for (int k = 1; k <= n - 1; ++k) {
        const Rat v = k <= m ? profile->at(k) : profile->at(n - k);
        out.dw_profile.at(k) = v;
        out.dw_profile.at(-k) = v;
    }
    out.dw_profile.recompute_flags();
    if (!out.dw_profile.dw) throw std::logic_error("benevolent_split: derived profile is not DW");
    for (int i = m + 1; i <= n - 1; ++i) {
        Rat beta = profile->at(n - i) - profile->at(i);
        if (beta < 0) throw std::logic_error("benevolent_split: negative beta");
        if (beta != 0) out.betas[i] = beta;
    }
    return out;
}

}  // namespace qap
