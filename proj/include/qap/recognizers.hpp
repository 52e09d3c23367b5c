#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qap/matrix.hpp"

namespace qap {

/// Lexicographically smallest violating index tuple plus the inequality it
/// falsifies, substitutable for reproduction. Indices are 1-based.
struct Witness {
    std::vector<int> indices;
    std::string inequality;
};

struct Verdict {
    enum class State { Yes, No, NotApplicable };
    State state = State::Yes;
    std::optional<Witness> witness;       // set when state == No
    std::string reason;                   // set when state == NotApplicable

    bool yes() const { return state == State::Yes; }
    bool no() const { return state == State::No; }

    static Verdict pass() { return {State::Yes, std::nullopt, {}}; }
    static Verdict fail(Witness w) { return {State::No, std::move(w), {}}; }
    static Verdict not_applicable(std::string reason) { return {State::NotApplicable, std::nullopt, std::move(reason)}; }
};

/// Robinson dissimilarity test (entries non-decreasing away from the main
/// diagonal), checked in O(n^2) via adjacent comparisons. Diagonal entries
/// are ignored. With similarity = true the inequalities are reversed.
/// Throws std::invalid_argument on non-symmetric input; n < 3 is vacuous.
Verdict check_robinson(const ExactMatrix& a, bool similarity = false);

/// Kalmanson test via the O(n^2) adjacent conditions
///   c[i,j+1] + c[i+1,j] <= c[i,j] + c[i+1,j+1]   (1 <= i <= n-3, i+2 <= j <= n-1)
///   c[i,1] + c[i+1,n]   <= c[i,n] + c[i+1,1]     (2 <= i <= n-2)
/// Throws on non-symmetric input; n < 3 is vacuously yes.
Verdict check_kalmanson(const ExactMatrix& c);

enum class MongeVariant { Monge, AntiMonge, Monotone, MonotoneAntiMonge };

/// Adjacent 2x2 submatrix inequalities (which imply the full quadruple
/// conditions), plus nonnegativity for the (anti-)Monge variants and
/// row/column monotonicity for the monotone variants.
Verdict check_monge_family(const ExactMatrix& b, MongeVariant variant);

/// Generating function f(-n+1 .. n-1) of a Toeplitz matrix plus class flags.
struct ToeplitzProfile {
    int n = 0;
    std::vector<Rat> f;  // f[k + n - 1] holds f(k)

    bool symmetric = false;
    bool circulant = false;
    bool simple = false;
    bool dw = false;
    bool up_benevolent = false;
    bool down_benevolent = false;

    const Rat& at(int k) const { return f.at(static_cast<std::size_t>(k + n - 1)); }
    Rat& at(int k) { return f.at(static_cast<std::size_t>(k + n - 1)); }

    static ToeplitzProfile zero(int n);
    void recompute_flags();
};

/// Returns the profile if every diagonal is constant, otherwise the first
/// (row-major) cell (i,j) with m[i,j] != m[i-1,j-1].
std::variant<ToeplitzProfile, Witness> extract_toeplitz_profile(const ExactMatrix& m);

enum class SumVariant { Sum, WeakSum, Constant, WeakConstant };

/// Certificate for the sum/constant family. Exactly the members relevant to
/// the variant are populated.
struct SumCertificate {
    SumVariant variant;
    std::vector<Rat> alpha, beta;   // sum / weak_sum: a[i,j] = alpha[i-1] + beta[j-1]
    std::optional<std::vector<Rat>> gamma;  // weak_sum on symmetric input
    std::optional<Rat> constant;    // constant / weak_constant
};

/// Weak variants ignore the diagonal. The gamma certificate is produced only
/// for symmetric weak-sum inputs.
std::variant<SumCertificate, Witness> check_sum_family(const ExactMatrix& a, SumVariant variant);

/// Ordered partition of {1..n} into consecutive nonempty intervals.
struct BlockPartition {
    int n = 0;
    std::vector<std::pair<int, int>> blocks;  // inclusive [lo, hi], 1-based

    bool is_cdw() const {
        for (std::size_t k = 1; k < blocks.size(); ++k)
            if (blocks[k].second - blocks[k].first < blocks[k - 1].second - blocks[k - 1].first) return false;
        return true;
    }
    void validate() const;
};

/// Recognizes cut matrices (0 on the diagonal blocks of a consecutive
/// partition, 1 elsewhere); returns the unique maximal-block partition.
std::variant<BlockPartition, Witness> check_cut_matrix(const ExactMatrix& a);

/// Aggregated per-class report for the classify command.
struct ClassificationReport {
    struct Entry {
        std::string name;
        Verdict verdict;
    };
    std::vector<Entry> entries;
    std::optional<ToeplitzProfile> toeplitz_profile;  // present when toeplitz: yes
    std::optional<BlockPartition> cut_partition;      // present when cut: yes
};

ClassificationReport classify(const ExactMatrix& a);

}  // namespace qap
