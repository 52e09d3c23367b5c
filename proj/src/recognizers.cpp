#include "qap/recognizers.hpp"

#include <algorithm>

namespace qap {

namespace {

void require_symmetric(const ExactMatrix& a, const char* op) {
    if (!a.is_symmetric()) throw std::invalid_argument(std::string(op) + ": input must be symmetric");
}

int half_ceil(int n) { return (n - 1 + 1) / 2; }  // ceil((n-1)/2)

}  // namespace

Verdict check_robinson(const ExactMatrix& a, bool similarity) {
    require_symmetric(a, "check_robinson");
    const int n = a.n();
    // Row-major over above-diagonal cells; for each, compare with the right
    // neighbour (same row, moving away from the diagonal) and the cell below
    // (same column, moving toward the diagonal). Diagonal is never touched.
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (j + 1 <= n) {
                const bool ok = similarity ? a.at(i, j) >= a.at(i, j + 1) : a.at(i, j) <= a.at(i, j + 1);
                if (!ok) {
                    const char* rel = similarity ? ">=" : "<=";
                    return Verdict::fail({{i, j, i, j + 1},
                                          "a[" + std::to_string(i) + "," + std::to_string(j) + "] " + rel + " a[" +
                                              std::to_string(i) + "," + std::to_string(j + 1) + "]"});
                }
            }
            if (i + 1 < j) {
                const bool ok = similarity ? a.at(i, j) <= a.at(i + 1, j) : a.at(i, j) >= a.at(i + 1, j);
                if (!ok) {
                    const char* rel = similarity ? "<=" : ">=";
                    return Verdict::fail({{i, j, i + 1, j},
                                          "a[" + std::to_string(i) + "," + std::to_string(j) + "] " + rel + " a[" +
                                              std::to_string(i + 1) + "," + std::to_string(j) + "]"});
                }
            }
        }
    }
    return Verdict::pass();
}

Verdict check_kalmanson(const ExactMatrix& c) {
    require_symmetric(c, "check_kalmanson");
    const int n = c.n();
    for (int i = 1; i <= n - 3; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
            if (!(c.at(i, j + 1) + c.at(i + 1, j) <= c.at(i, j) + c.at(i + 1, j + 1))) {
                return Verdict::fail({{i, j},
                                      "c[" + std::to_string(i) + "," + std::to_string(j + 1) + "]+c[" +
                                          std::to_string(i + 1) + "," + std::to_string(j) + "] <= c[" +
                                          std::to_string(i) + "," + std::to_string(j) + "]+c[" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) + "]"});
            }
        }
    }
    for (int i = 2; i <= n - 2; ++i) {
        if (!(c.at(i, 1) + c.at(i + 1, n) <= c.at(i, n) + c.at(i + 1, 1))) {
            return Verdict::fail({{i},
                                  "c[" + std::to_string(i) + ",1]+c[" + std::to_string(i + 1) + "," +
                                      std::to_string(n) + "] <= c[" + std::to_string(i) + "," + std::to_string(n) +
                                      "]+c[" + std::to_string(i + 1) + ",1]"});
        }
    }
    return Verdict::pass();
}

Verdict check_monge_family(const ExactMatrix& b, MongeVariant variant) {
    const int n = b.n();
    const bool needs_inequalities = variant != MongeVariant::Monotone;
    const bool needs_monotone = variant == MongeVariant::Monotone || variant == MongeVariant::MonotoneAntiMonge;
    const bool anti = variant != MongeVariant::Monge;

    if (needs_inequalities) {
        // Nonnegativity is part of the (anti-)Monge definition.
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (b.at(i, j) < 0)
                    return Verdict::fail(
                        {{i, j}, "b[" + std::to_string(i) + "," + std::to_string(j) + "] >= 0"});
        for (int i = 1; i <= n - 1; ++i) {
            for (int j = 1; j <= n - 1; ++j) {
                const Rat main = b.at(i, j) + b.at(i + 1, j + 1);
                const Rat other = b.at(i, j + 1) + b.at(i + 1, j);
                const bool ok = anti ? main >= other : main <= other;
                if (!ok) {
                    const char* rel = anti ? ">=" : "<=";
                    return Verdict::fail({{i, j},
                                          "b[" + std::to_string(i) + "," + std::to_string(j) + "]+b[" +
                                              std::to_string(i + 1) + "," + std::to_string(j + 1) + "] " + rel +
                                              " b[" + std::to_string(i) + "," + std::to_string(j + 1) + "]+b[" +
                                              std::to_string(i + 1) + "," + std::to_string(j) + "]"});
                }
            }
        }
    }
    if (needs_monotone) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n - 1; ++j)
                if (!(b.at(i, j) <= b.at(i, j + 1)))
                    return Verdict::fail({{i, j, i, j + 1},
                                          "b[" + std::to_string(i) + "," + std::to_string(j) + "] <= b[" +
                                              std::to_string(i) + "," + std::to_string(j + 1) + "]"});
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n; ++j)
                if (!(b.at(i, j) <= b.at(i + 1, j)))
                    return Verdict::fail({{i, j, i + 1, j},
                                          "b[" + std::to_string(i) + "," + std::to_string(j) + "] <= b[" +
                                              std::to_string(i + 1) + "," + std::to_string(j) + "]"});
    }
    return Verdict::pass();
}

ToeplitzProfile ToeplitzProfile::zero(int n) {
    ToeplitzProfile p;
    p.n = n;
    p.f.assign(static_cast<std::size_t>(2 * n - 1), Rat(0));
    p.recompute_flags();
    return p;
}

void ToeplitzProfile::recompute_flags() {
    const int m = half_ceil(n);
    symmetric = true;
    for (int k = 1; k <= n - 1; ++k)
        if (at(-k) != at(k)) symmetric = false;
    circulant = true;
    for (int k = 1; k <= n - 1; ++k)
        if (at(k) != at(k - n)) circulant = false;

    bool f0_zero = at(0) == 0;
    bool down_chain = true, up_chain = true, full_down_chain = true;
    for (int k = 1; k <= n - 2; ++k) {
        if (at(k) < at(k + 1)) full_down_chain = false;
        if (k <= m - 1) {
            if (at(k) < at(k + 1)) down_chain = false;
            if (at(k) > at(k + 1)) up_chain = false;
        }
    }
    bool mirror_eq = true, mirror_ge = true, mirror_le = true;
    for (int k = 1; k <= n - 1; ++k) {
        if (k > m && at(k) != at(n - k)) mirror_eq = false;
        if (k <= m) {
            if (at(k) < at(n - k)) mirror_ge = false;
            if (at(k) > at(n - k)) mirror_le = false;
        }
    }
    simple = symmetric && f0_zero && full_down_chain;
    dw = symmetric && circulant && f0_zero && down_chain && mirror_eq;
    up_benevolent = symmetric && f0_zero && up_chain && mirror_le;
    down_benevolent = symmetric && f0_zero && down_chain && mirror_ge;
}

std::variant<ToeplitzProfile, Witness> extract_toeplitz_profile(const ExactMatrix& m) {
    const int n = m.n();
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j)
            if (m.at(i, j) != m.at(i - 1, j - 1))
                return Witness{{i, j},
                               "m[" + std::to_string(i) + "," + std::to_string(j) + "] = m[" + std::to_string(i - 1) +
                                   "," + std::to_string(j - 1) + "]"};
    ToeplitzProfile p;
    p.n = n;
    p.f.assign(static_cast<std::size_t>(2 * n - 1), Rat(0));
    for (int k = -(n - 1); k <= n - 1; ++k) p.at(k) = k >= 0 ? m.at(k + 1, 1) : m.at(1, 1 - k);
    p.recompute_flags();
    return p;
}

std::variant<SumCertificate, Witness> check_sum_family(const ExactMatrix& a, SumVariant variant) {
    const int n = a.n();
    const bool weak = variant == SumVariant::WeakSum || variant == SumVariant::WeakConstant;
    const bool constant = variant == SumVariant::Constant || variant == SumVariant::WeakConstant;

    auto relevant = [&](int i, int j) { return !weak || i != j; };

    if (constant) {
        std::optional<Rat> c;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (!relevant(i, j)) continue;
                if (!c) {
                    c = a.at(i, j);
                } else if (a.at(i, j) != *c) {
                    return Witness{{i, j}, "a[" + std::to_string(i) + "," + std::to_string(j) + "] = " + to_string(*c)};
                }
            }
        SumCertificate cert;
        cert.variant = variant;
        cert.constant = c.value_or(Rat(0));  // n = 1, weak: vacuous
        return cert;
    }

    // sum / weak_sum: find alpha, beta with a[i,j] = alpha_i + beta_j on the
    // relevant cells. Gauge: beta_1 = 0.
    std::vector<Rat> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    if (!weak) {
        for (int i = 1; i <= n; ++i) alpha[i - 1] = a.at(i, 1);
        for (int j = 2; j <= n; ++j) beta[j - 1] = a.at(1, j) - alpha[0];
    } else if (n == 2) {
        alpha[1] = a.at(2, 1);
        beta[1] = a.at(1, 2);
    } else if (n >= 3) {
        for (int i = 2; i <= n; ++i) alpha[i - 1] = a.at(i, 1);
        for (int j = 2; j <= n; ++j) {
            const int probe = (j == 2) ? 3 : 2;  // off-diagonal row with known alpha
            beta[j - 1] = a.at(probe, j) - alpha[probe - 1];
        }
        alpha[0] = a.at(1, 2) - beta[1];
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!relevant(i, j)) continue;
            if (a.at(i, j) != alpha[i - 1] + beta[j - 1])
                return Witness{{i, j},
                               "a[" + std::to_string(i) + "," + std::to_string(j) + "] = alpha[" +
                                   std::to_string(i) + "]+beta[" + std::to_string(j) + "]"};
        }
    SumCertificate cert;
    cert.variant = variant;
    cert.alpha = alpha;
    cert.beta = beta;
    if (weak && a.is_symmetric() && n >= 2) {
        // Symmetric weak sum: a[i,j] = gamma_i + gamma_j off-diagonal.
        // From alpha/beta with beta_1 = 0: gamma_i = alpha_i - s, gamma_j =
        // beta_j + s with 2s = alpha_j - beta_j (constant over j by symmetry).
        std::vector<Rat> gamma(static_cast<std::size_t>(n));
        Rat two_s = alpha[1] - beta[1];
        bool ok = true;
        for (int j = 2; j <= n && ok; ++j)
            if (alpha[j - 1] - beta[j - 1] != two_s) ok = false;
        if (ok) {
            Rat s = two_s / 2;
            for (int i = 0; i < n; ++i) gamma[i] = alpha[i] - s;
            bool verify = true;
            for (int i = 1; i <= n && verify; ++i)
                for (int j = 1; j <= n && verify; ++j)
                    if (i != j && a.at(i, j) != gamma[i - 1] + gamma[j - 1]) verify = false;
            if (verify) cert.gamma = std::move(gamma);
        }
    }
    return cert;
}

void BlockPartition::validate() const {
    if (blocks.empty() || blocks.front().first != 1 || blocks.back().second != n)
        throw std::invalid_argument("block partition must cover {1..n}");
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].first > blocks[k].second) throw std::invalid_argument("empty block");
        if (k > 0 && blocks[k].first != blocks[k - 1].second + 1)
            throw std::invalid_argument("blocks must be consecutive");
    }
}

std::variant<BlockPartition, Witness> check_cut_matrix(const ExactMatrix& a) {
    const int n = a.n();
    // Cheap row-major cell screen first so the reported witness is the
    // lexicographically smallest offending cell.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j && a.at(i, j) != 0)
                return Witness{{i, j}, "a[" + std::to_string(i) + "," + std::to_string(j) + "] = 0"};
            if (i != j && a.at(i, j) != 0 && a.at(i, j) != 1)
                return Witness{{i, j}, "a[" + std::to_string(i) + "," + std::to_string(j) + "] in {0,1}"};
        }
    // Greedy maximal blocks: index i extends the current block while it is
    // 0-linked to every member.
    BlockPartition part;
    part.n = n;
    int lo = 1;
    for (int i = 2; i <= n; ++i) {
        bool extends = true;
        for (int j = lo; j < i && extends; ++j)
            if (a.at(j, i) != 0) extends = false;
        if (!extends) {
            part.blocks.emplace_back(lo, i - 1);
            lo = i;
        }
    }
    part.blocks.emplace_back(lo, n);
    // Verify: 0 inside blocks, 1 outside (and symmetry falls out of that).
    auto block_of = std::vector<int>(static_cast<std::size_t>(n + 1));
    for (std::size_t k = 0; k < part.blocks.size(); ++k)
        for (int i = part.blocks[k].first; i <= part.blocks[k].second; ++i) block_of[i] = static_cast<int>(k);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rat expect = block_of[i] == block_of[j] ? 0 : 1;
            if (a.at(i, j) != expect)
                return Witness{{i, j},
                               "a[" + std::to_string(i) + "," + std::to_string(j) + "] = " + to_string(expect)};
        }
    return part;
}

ClassificationReport classify(const ExactMatrix& a) {
    ClassificationReport report;
    auto add = [&](std::string name, Verdict v) { report.entries.push_back({std::move(name), std::move(v)}); };
    const bool symmetric = a.is_symmetric();

    auto guarded = [&](auto&& fn) -> Verdict {
        if (!symmetric) return Verdict::not_applicable("requires symmetric input");
        return fn();
    };

    add("robinson", guarded([&] { return check_robinson(a, false); }));
    add("robinson_similarity", guarded([&] { return check_robinson(a, true); }));
    add("kalmanson", guarded([&] { return check_kalmanson(a); }));
    add("monge", check_monge_family(a, MongeVariant::Monge));
    add("anti_monge", check_monge_family(a, MongeVariant::AntiMonge));
    add("monotone", check_monge_family(a, MongeVariant::Monotone));
    add("monotone_anti_monge", check_monge_family(a, MongeVariant::MonotoneAntiMonge));

    auto toe = extract_toeplitz_profile(a);
    if (auto* profile = std::get_if<ToeplitzProfile>(&toe)) {
        add("toeplitz", Verdict::pass());
        report.toeplitz_profile = *profile;
    } else {
        add("toeplitz", Verdict::fail(std::get<Witness>(toe)));
    }

    auto cut = check_cut_matrix(a);
    if (auto* part = std::get_if<BlockPartition>(&cut)) {
        add("cut", Verdict::pass());
        report.cut_partition = *part;
    } else {
        add("cut", Verdict::fail(std::get<Witness>(cut)));
    }

    for (auto variant : {SumVariant::Sum, SumVariant::WeakSum, SumVariant::Constant, SumVariant::WeakConstant}) {
        const char* name = variant == SumVariant::Sum            ? "sum"
                           : variant == SumVariant::WeakSum      ? "weak_sum"
                           : variant == SumVariant::Constant     ? "constant"
                                                                 : "weak_constant";
        auto res = check_sum_family(a, variant);
        if (std::holds_alternative<SumCertificate>(res)) {
            add(name, Verdict::pass());
        } else {
            add(name, Verdict::fail(std::get<Witness>(res)));
        }
    }
    return report;
}

}  // namespace qap
