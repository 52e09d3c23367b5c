#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qap/matrix.hpp"
#include "qap/recognizers.hpp"

namespace qap {

/// Cut-weight matrix D(C): the coefficients read off C cell by cell,
///   d[i,j] = c[i-1,j] + c[i,j+1] - c[i,j] - c[i-1,j+1]   for 2 <= i < j <= n-1
///   d[1,i] = c[i+1,1] - c[i,1]                           for i = 2..n-1
///   d[i,n] = c[i-1,n] - c[i,n]                           for i = 2..n-1
/// All other cells are fixed to 0. Entry (i,j) corresponds to the cut matrix
/// A^(i,j) whose single multi-element block is {i..j}.
struct CutWeightMatrix {
    int n = 0;
    std::vector<Rat> d;  // row-major (n+1)^2, 1-based accessors

    Rat& at(int i, int j) { return d[static_cast<std::size_t>(i) * (n + 1) + j]; }
    const Rat& at(int i, int j) const { return d[static_cast<std::size_t>(i) * (n + 1) + j]; }

    bool all_nonnegative() const;
    /// Positive cells as ((i,j), weight), row-major order.
    std::vector<std::pair<std::pair<int, int>, Rat>> positive_entries() const;
};

/// Requires a symmetric matrix with n >= 4.
CutWeightMatrix cut_weight_matrix(const ExactMatrix& c);

/// Directed multigraph on nodes 1..n+1 with mult(i -> j+1) = d[i,j] for each
/// positive coefficient. Edge lengths are head - tail >= 2.
struct CutWeightMultigraph {
    int nodes = 0;                              // n + 1
    std::map<std::pair<int, int>, Rat> mult;    // (tail, head) -> multiplicity

    /// Number of edges of length >= x entering / leaving the node.
    Rat entering_at_least(int node, int length) const;
    Rat leaving_at_least(int node, int length) const;
};

CutWeightMultigraph build_multigraph(const CutWeightMatrix& d);

/// One weighted interval cut A^(k,l).
struct CutTerm {
    int k = 0, l = 0;
    Rat weight;
};

/// Kalmanson cut decomposition: C = S + sum delta A^(i+1,j)
/// + sum (alpha_i A^(1,i) + beta_i A^(i+1,n)) with S a weak sum matrix,
/// delta >= 0 and alpha_i + beta_i >= 0.
struct KalmansonDecomposition {
    std::map<std::pair<int, int>, Rat> delta;   // (i+1, j) -> delta, may be 0-filtered
    std::map<int, Rat> alpha;                    // i = 2..n-2
    std::map<int, Rat> beta;                     // i = 2..n-2
    ExactMatrix residual;                        // the weak sum matrix S
    std::vector<Rat> gammas;                     // S off-diagonal = gamma_i + gamma_j
};

KalmansonDecomposition kalmanson_decomposition(const ExactMatrix& c);

/// Weak-constant offset plus weighted cut matrices.
struct ConicDecomposition {
    int n = 0;
    Rat offset;                                              // off-diagonal residual level
    std::vector<std::pair<Rat, BlockPartition>> terms;       // weight > 0 each
    std::optional<std::vector<Rat>> residual_gammas;         // set when the residual is weak-sum only

    /// offset + sum of weighted cut matrices (diagonal = 0).
    ExactMatrix reconstruct() const;
};

/// Robinson-and-Kalmanson refinement: requires both recognizers to pass.
/// All weights are individually nonnegative and the residual is weak-constant.
ConicDecomposition robinson_kalmanson_decomposition(const ExactMatrix& c);

/// Recovers gamma with c[i,j] = gamma_i + gamma_j for all i < j.
/// Requires every adjacent Kalmanson inequality to hold with equality;
/// returns the first strict one as a witness otherwise.
std::variant<std::vector<Rat>, Witness> weak_sum_parameters(const ExactMatrix& c);

struct CdwViolation {
    int k = 0, l = 0;
};

/// Feasibility of representing the source as weak-constant + conic CDW cuts:
///   sum_{i<=l} d[i,k] <= sum_{j>=2k+1-l} d[k+1,j]
/// checked for k = 2..n-1 and l = 1..k-1 (empty right-hand sums are zero).
/// Requires all stored coefficients nonnegative.
std::optional<CdwViolation> cdw_feasibility(const CutWeightMatrix& d);

/// Path-peeling CDW decomposition. Requires Kalmanson and Robinson input.
std::variant<ConicDecomposition, CdwViolation> cdw_decomposition(const ExactMatrix& c);

/// Down-benevolent split B = B' - sum beta_i T^(i) with B' DW-Toeplitz and
/// beta_i = f(n-i) - f(i) >= 0 for ceil((n-1)/2) < i <= n-1.
struct BenevolentSplit {
    ToeplitzProfile dw_profile;
    std::map<int, Rat> betas;
};

BenevolentSplit benevolent_split(const ExactMatrix& b);

}  // namespace qap
