#include "qap/generators.hpp"

#include <algorithm>
#include <random>

#include "qap/core.hpp"
#include "qap/reports.hpp"

namespace qap {

namespace {

int half_ceil(int n) { return n / 2; }  // ceil((n-1)/2)

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Deterministic value stream on top of mt19937_64 (the standard guarantees
/// identical engine output across platforms; distributions do not, so raw
/// modulo reduction is used instead).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rational(int lo, int hi) {
        static const int dens[] = {1, 1, 1, 2, 3};
        return make_rat(uniform(lo, hi), dens[raw() % 5]);
    }

    Rat nonneg(int hi) { return rat_abs(rational(0, hi)); }

private:
    std::mt19937_64 eng_;
};

ExactMatrix zero(int n) { return ExactMatrix(n); }

void add_scaled(ExactMatrix& acc, const ExactMatrix& m, const Rat& w) {
    for (int i = 1; i <= acc.n(); ++i)
        for (int j = 1; j <= acc.n(); ++j) acc.at(i, j) += w * m.at(i, j);
}

ToeplitzProfile profile_from_positive(int n, const std::vector<Rat>& fpos) {
    ToeplitzProfile p = ToeplitzProfile::zero(n);
    for (int k = 1; k <= n - 1; ++k) {
        p.at(k) = fpos[k - 1];
        p.at(-k) = fpos[k - 1];
    }
    p.recompute_flags();
    return p;
}

}  // namespace

Permutation supnick_permutation(int n) {
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; v += 2) img.push_back(v);
    for (int v = n - (n % 2); v >= 2; v -= 2) img.push_back(v);
    return Permutation(std::move(img));
}

Permutation cyclic_shift(int n, int u) {
    if (u < 1 || u > n) throw std::invalid_argument("cyclic_shift: u out of range");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[i - 1] = ((u - 1 + i - 1) % n) + 1;
    return Permutation(std::move(img));
}

ExactMatrix extremal_anti_monge(int n, int p, int q, bool symmetric) {
    if (!(1 <= p && p <= n && 1 <= q && q <= n)) throw std::invalid_argument("extremal_anti_monge: index violation");
    if (symmetric && p > q) throw std::invalid_argument("extremal_anti_monge: symmetric mode requires p <= q");
    ExactMatrix m(n);
    auto in_rpq = [&](int i, int j, int pp, int qq) { return i >= n - pp + 1 && j >= n - qq + 1; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!symmetric) {
                m.at(i, j) = in_rpq(i, j, p, q) ? 1 : 0;
            } else if (p == q) {
                m.at(i, j) = in_rpq(i, j, p, p) ? 1 : 0;
            } else {
                m.at(i, j) = Rat(in_rpq(i, j, p, q) ? 1 : 0) + Rat(in_rpq(i, j, q, p) ? 1 : 0);
            }
        }
    return m;
}

std::vector<int> RaySpec::admissible_shifts(int n, int p, int q, bool cyclic) {
    std::vector<int> out;
    if (cyclic) {
        for (int u = 1; u <= n; ++u) out.push_back(u);
        return out;
    }
    // Nonzero region of the permuted ray: rows/cols [lo, hi]. The shift
    // sigma_u keeps it contiguous iff u <= lo or u >= hi + 1.
    const int center_start = ceil_div(n - p, 2) + 1;
    const int center_end = n - (n - p) / 2;
    const int a = n - q + 1, b = n - p;
    const int left = b >= a ? (b + 1) / 2 - a / 2 : 0;  // odd values in the strip
    const int right = (q - p) - left;
    const int lo = center_start - left;
    const int hi = center_end + right;
    for (int u = 1; u <= n; ++u)
        if (u <= lo || u >= hi + 1) out.push_back(u);
    return out;
}

void RaySpec::validate() const {
    if (!(1 <= p && p <= q && q <= n)) throw std::invalid_argument("RaySpec: need 1 <= p <= q <= n");
    auto shifts = admissible_shifts(n, p, q, cyclic);
    if (std::find(shifts.begin(), shifts.end(), u) == shifts.end())
        throw std::invalid_argument("RaySpec: inadmissible shift u=" + std::to_string(u));
}

ExactMatrix ps_ray(const RaySpec& spec) {
    spec.validate();
    ExactMatrix rbar = extremal_anti_monge(spec.n, spec.p, spec.q, /*symmetric=*/true);
    ExactMatrix permuted = apply_permutation(rbar, supnick_permutation(spec.n));
    if (spec.u == 1) return permuted;
    return apply_permutation(permuted, cyclic_shift(spec.n, spec.u));
}

ExactMatrix ps_ray_closed_form(int n, int p, int q) {
    if (!(1 <= p && p <= q && q <= n)) throw std::invalid_argument("ps_ray_closed_form: need 1 <= p <= q <= n");
    const int center_start = ceil_div(n - p, 2) + 1;
    const int center_end = n - (n - p) / 2;
    const int a = n - q + 1, b = n - p;
    const int left = b >= a ? (b + 1) / 2 - a / 2 : 0;
    const int right = (q - p) - left;
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int x = std::min(i, j), y = std::max(i, j);
            Rat v = 0;
            if (center_start <= x && y <= center_end)
                v = p == q ? 1 : 2;
            else if (center_start - left <= x && x <= center_start - 1 && center_start <= y && y <= center_end)
                v = 1;
            else if (center_start <= x && x <= center_end && center_end + 1 <= y && y <= center_end + right)
                v = 1;
            m.at(i, j) = v;
        }
    return m;
}

ExactMatrix ps_matrix(const std::vector<PsTerm>& terms, PsKind kind,
                      const std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>>& sum_part) {
    if (terms.empty() && !sum_part) throw std::invalid_argument("ps_matrix: no terms and no sum part");
    int n = terms.empty() ? static_cast<int>(sum_part->first.size()) : terms.front().spec.n;
    ExactMatrix acc(n);
    for (const auto& t : terms) {
        if (t.spec.n != n) throw std::invalid_argument("ps_matrix: mixed dimensions");
        if (t.weight <= 0) throw std::invalid_argument("ps_matrix: weights must be positive");
        add_scaled(acc, ps_ray(t.spec), t.weight);
    }
    if (kind == PsKind::AntiMonge) {
        if (sum_part) throw std::invalid_argument("ps_matrix: sum part applies to the monge kind only");
        return acc;
    }
    ExactMatrix m = -acc;
    if (sum_part) {
        const auto& [alpha, beta] = *sum_part;
        if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
            throw std::invalid_argument("ps_matrix: sum part dimension mismatch");
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m.at(i, j) += alpha[i - 1] + beta[j - 1];
    }
    return m;
}

ExactMatrix stripe_matrix(int n, int i) {
    if (!(half_ceil(n) < i && i <= n - 1)) throw std::invalid_argument("stripe_matrix: i out of range");
    ExactMatrix m(n);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (std::abs(r - c) == i) m.at(r, c) = 1;
    return m;
}

ExactMatrix toeplitz_from_profile(const ToeplitzProfile& f) {
    if (f.n < 1 || static_cast<int>(f.f.size()) != 2 * f.n - 1)
        throw std::invalid_argument("toeplitz_from_profile: malformed profile");
    ExactMatrix m(f.n);
    for (int i = 1; i <= f.n; ++i)
        for (int j = 1; j <= f.n; ++j) m.at(i, j) = f.at(i - j);
    return m;
}

ExactMatrix cut_matrix_from_blocks(const BlockPartition& blocks) {
    blocks.validate();
    const int n = blocks.n;
    ExactMatrix m(n);
    std::vector<int> block_of(static_cast<std::size_t>(n + 1));
    for (std::size_t k = 0; k < blocks.blocks.size(); ++k)
        for (int i = blocks.blocks[k].first; i <= blocks.blocks[k].second; ++i) block_of[i] = static_cast<int>(k);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && block_of[i] != block_of[j]) m.at(i, j) = 1;
    return m;
}

namespace {

// --- seeded class generators; every instance passes its recognizer ---

GeneratedInstance gen_robinson(int n, Rng& rng) {
    // Fill by increasing diagonal distance; each cell dominates its inner
    // neighbours, which is exactly the Robinson condition.
    ExactMatrix m(n);
    for (int d = 1; d <= n - 1; ++d)
        for (int i = 1; i + d <= n; ++i) {
            const int j = i + d;
            Rat floor_val = 0;
            if (j - 1 > i) floor_val = std::max(floor_val, m.at(i, j - 1));
            if (i + 1 < j) floor_val = std::max(floor_val, m.at(i + 1, j));
            m.at(i, j) = floor_val + rng.nonneg(4);
            m.at(j, i) = m.at(i, j);
        }
    nlohmann::ordered_json params;
    params["class"] = "robinson";
    return {std::move(m), std::move(params)};
}

void add_interval_cut(ExactMatrix& m, int k, int l, const Rat& w) {
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j) {
            if (i == j) continue;
            const bool inside = k <= i && i <= l && k <= j && j <= l;
            if (!inside) m.at(i, j) += w;
        }
}

GeneratedInstance gen_kalmanson(int n, Rng& rng) {
    // Kalmanson cut decomposition run in reverse: weak-sum base + nonnegative interior cut
    // weights + boundary pairs with alpha + beta >= 0.
    std::vector<Rat> gamma;
    for (int i = 0; i < n; ++i) gamma.push_back(rng.rational(-4, 4));
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m.at(i, j) = gamma[i - 1] + gamma[j - 1];
    nlohmann::ordered_json cuts = nlohmann::ordered_json::array();
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            if (rng.uniform(0, 2) == 0) {
                Rat w = rng.nonneg(4);
                if (w == 0) continue;
                add_interval_cut(m, i + 1, j, w);
                cuts.push_back({{"k", i + 1}, {"l", j}, {"weight", reports::rational(w)}});
            }
    for (int i = 2; i <= n - 2; ++i)
        if (rng.uniform(0, 1) == 0) {
            Rat a = rng.rational(-3, 5);
            Rat b = (a < 0 ? -a : Rat(0)) + rng.nonneg(3);
            add_interval_cut(m, 1, i, a);
            add_interval_cut(m, i + 1, n, b);
            cuts.push_back({{"boundary_i", i}, {"alpha", reports::rational(a)}, {"beta", reports::rational(b)}});
        }
    nlohmann::ordered_json params;
    params["class"] = "kalmanson";
    params["gammas"] = reports::rationals(gamma);
    params["cuts"] = cuts;
    return {std::move(m), std::move(params)};
}

GeneratedInstance gen_robinson_kalmanson(int n, Rng& rng) {
    // Robinson+Kalmanson decomposition run in reverse: weak-constant offset + individually
    // nonnegative cut weights over the full boundary ranges.
    Rat z = rng.rational(-3, 3);
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m.at(i, j) = z;
    nlohmann::ordered_json cuts = nlohmann::ordered_json::array();
    auto maybe_cut = [&](int k, int l, int chance) {
        if (rng.uniform(0, chance) != 0) return;
        Rat w = rng.nonneg(4);
        if (w == 0) return;
        add_interval_cut(m, k, l, w);
        cuts.push_back({{"k", k}, {"l", l}, {"weight", reports::rational(w)}});
    };
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 2; j <= n - 1; ++j) maybe_cut(i + 1, j, 2);
    for (int i = 2; i <= n - 1; ++i) maybe_cut(1, i, 1);
    for (int i = 1; i <= n - 2; ++i) maybe_cut(i + 1, n, 1);
    nlohmann::ordered_json params;
    params["class"] = "robinson_kalmanson";
    params["offset"] = reports::rational(z);
    params["cuts"] = cuts;
    return {std::move(m), std::move(params)};
}

GeneratedInstance gen_cdw_conic(int n, Rng& rng) {
    Rat z = rng.rational(-3, 3);
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m.at(i, j) = z;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    const int count = rng.uniform(1, 4);
    for (int t = 0; t < count; ++t) {
        std::vector<int> sizes;
        int left = n;
        while (left > 0) {
            int s = rng.uniform(1, left);
            sizes.push_back(s);
            left -= s;
        }
        std::sort(sizes.begin(), sizes.end());
        BlockPartition part;
        part.n = n;
        int cur = 1;
        for (int s : sizes) {
            part.blocks.emplace_back(cur, cur + s - 1);
            cur += s;
        }
        Rat w = rng.nonneg(3) + Rat(1, 3);
        ExactMatrix cm = cut_matrix_from_blocks(part);
        add_scaled(m, cm, w);
        nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
        for (auto [lo, hi] : part.blocks) blocks.push_back({lo, hi});
        terms.push_back({{"weight", reports::rational(w)}, {"blocks", blocks}});
    }
    nlohmann::ordered_json params;
    params["class"] = "cdw_conic";
    params["offset"] = reports::rational(z);
    params["terms"] = terms;
    return {std::move(m), std::move(params)};
}

GeneratedInstance gen_monotone_anti_monge(int n, Rng& rng, bool symmetric) {
    ExactMatrix m(n);
    nlohmann::ordered_json rays = nlohmann::ordered_json::array();
    const int count = rng.uniform(1, 2 * n);
    for (int t = 0; t < count; ++t) {
        int p = rng.uniform(1, n), q = rng.uniform(1, n);
        if (symmetric && p > q) std::swap(p, q);
        Rat w = rng.nonneg(3) + Rat(1, 2);
        add_scaled(m, extremal_anti_monge(n, p, q, symmetric), w);
        rays.push_back({{"p", p}, {"q", q}, {"weight", reports::rational(w)}});
    }
    nlohmann::ordered_json params;
    params["class"] = symmetric ? "symmetric_monotone_anti_monge" : "monotone_anti_monge";
    params["rays"] = rays;
    return {std::move(m), std::move(params)};
}

GeneratedInstance gen_toeplitz(int n, Rng& rng, std::string_view klass) {
    const int m_half = half_ceil(n);
    std::vector<Rat> fpos(static_cast<std::size_t>(n - 1));
    if (klass == "simple_toeplitz") {
        Rat cur = rng.rational(0, 8);
        for (int i = 1; i <= n - 1; ++i) {
            fpos[i - 1] = cur;
            cur -= rng.nonneg(3);
        }
    } else if (klass == "dw_toeplitz" || klass == "down_benevolent" || klass == "up_benevolent") {
        const bool up = klass == "up_benevolent";
        Rat cur = up ? rng.rational(-4, 4) : rng.rational(0, 8);
        for (int i = 1; i <= m_half; ++i) {
            fpos[i - 1] = cur;
            if (up)
                cur += rng.nonneg(3);
            else
                cur -= rng.nonneg(3);
        }
        for (int i = m_half + 1; i <= n - 1; ++i) {
            const Rat& mirror = fpos[n - i - 1];
            if (klass == "dw_toeplitz")
                fpos[i - 1] = mirror;
            else if (klass == "down_benevolent")
                fpos[i - 1] = mirror - rng.nonneg(3);
            else
                fpos[i - 1] = mirror + rng.nonneg(3);
        }
    } else {
        throw std::invalid_argument("unknown toeplitz class");
    }
    ToeplitzProfile prof = profile_from_positive(n, fpos);
    nlohmann::ordered_json params;
    params["class"] = std::string(klass);
    params["f"] = reports::rationals(fpos);
    return {toeplitz_from_profile(prof), std::move(params)};
}

GeneratedInstance gen_ps(int n, Rng& rng, std::string_view klass) {
    const bool cyclic = klass == "cyclic_ps_monge";
    const bool monge = klass != "ps_anti_monge";
    std::vector<PsTerm> terms;
    nlohmann::ordered_json jterms = nlohmann::ordered_json::array();
    const int count = rng.uniform(1, 4);
    for (int t = 0; t < count; ++t) {
        int p = rng.uniform(1, n);
        int q = rng.uniform(p, n);
        auto shifts = RaySpec::admissible_shifts(n, p, q, cyclic);
        int u = shifts[static_cast<std::size_t>(rng.raw() % shifts.size())];
        Rat w = rng.nonneg(3) + Rat(1, 2);
        terms.push_back({w, RaySpec{n, p, q, u, cyclic}});
        jterms.push_back({{"p", p}, {"q", q}, {"u", u}, {"weight", reports::rational(w)}});
    }
    nlohmann::ordered_json params;
    params["class"] = std::string(klass);
    params["terms"] = jterms;
    if (!monge) {
        return {ps_matrix(terms, PsKind::AntiMonge), std::move(params)};
    }
    std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> sum_part;
    if (cyclic) {
        // A circulant partner matrix keeps sum matrices optimality-neutral,
        // so the cyclic class carries a general random sum part.
        std::vector<Rat> alpha, beta;
        for (int i = 0; i < n; ++i) alpha.push_back(rng.rational(-4, 4));
        for (int i = 0; i < n; ++i) beta.push_back(rng.rational(-4, 4));
        sum_part = {alpha, beta};
        params["sum_alpha"] = reports::rationals(alpha);
        params["sum_beta"] = reports::rationals(beta);
    } else {
        // Constant sum part: a non-constant sum matrix breaks identity
        // optimality against non-circulant Toeplitz partners.
        Rat c = rng.rational(-4, 4);
        std::vector<Rat> alpha(static_cast<std::size_t>(n), c / 2);
        std::vector<Rat> beta(static_cast<std::size_t>(n), c / 2);
        sum_part = {alpha, beta};
        params["sum_constant"] = reports::rational(c);
    }
    return {ps_matrix(terms, PsKind::Monge, sum_part), std::move(params)};
}

}  // namespace

std::vector<std::string> random_instance_classes() {
    return {"robinson",      "kalmanson",      "robinson_kalmanson",
            "cdw_conic",     "monotone_anti_monge", "symmetric_monotone_anti_monge",
            "up_benevolent", "down_benevolent", "dw_toeplitz",
            "simple_toeplitz", "ps_anti_monge", "ps_monge",
            "cyclic_ps_monge"};
}

GeneratedInstance random_instance(std::string_view class_name, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_instance: n must be >= 1");
    Rng rng(seed);
    GeneratedInstance out = [&]() -> GeneratedInstance {
        if (class_name == "robinson") return gen_robinson(n, rng);
        if (class_name == "kalmanson") return gen_kalmanson(n, rng);
        if (class_name == "robinson_kalmanson") return gen_robinson_kalmanson(n, rng);
        if (class_name == "cdw_conic") return gen_cdw_conic(n, rng);
        if (class_name == "monotone_anti_monge") return gen_monotone_anti_monge(n, rng, false);
        if (class_name == "symmetric_monotone_anti_monge") return gen_monotone_anti_monge(n, rng, true);
        if (class_name == "simple_toeplitz" || class_name == "dw_toeplitz" || class_name == "down_benevolent" ||
            class_name == "up_benevolent")
            return gen_toeplitz(n, rng, class_name);
        if (class_name == "ps_anti_monge" || class_name == "ps_monge" || class_name == "cyclic_ps_monge")
            return gen_ps(n, rng, class_name);
        throw std::invalid_argument("random_instance: unknown class '" + std::string(class_name) + "'");
    }();
    out.params["n"] = n;
    out.params["seed"] = seed;
    return out;
}

}  // namespace qap
