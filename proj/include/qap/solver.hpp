#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "qap/core.hpp"
#include "qap/decomposition.hpp"
#include "qap/generators.hpp"

namespace qap {

enum class CaseId {
    Combined1,
    Combined2,
    Combined3,
    CdwAntiMonge,
    DwKalmansonDw,
    LsRobinsonSimple,
    DownBenevolent,
    UpBenevolentPs,
    BcrwAntiMongeBenevolent,
    PsMongeDownBenevolent,
};

/// Stable external names, e.g. "combined_1", "DW_kalmanson_dw".
std::string_view case_name(CaseId id);

/// Detection evidence: every hypothesis named by the case id, re-checkable
/// from the stored verdicts / decompositions alone.
struct CaseCertificate {
    CaseId id;
    Permutation optimal_permutation;
    nlohmann::ordered_json evidence;
};

struct Solution {
    Permutation permutation;
    Rat value;
    nlohmann::ordered_json certificate;
};

struct BruteForceOptions {
    int max_n = 10;
    bool maximize = false;
    int threads = 1;
};

/// Exact minimum (or maximum) of the QAP objective over all n! permutations;
/// deterministic tie-break: the lexicographically smallest optimal
/// permutation, independent of the worker count.
Solution brute_force(const ExactMatrix& a, const ExactMatrix& b, const BruteForceOptions& options = {});

/// Exhaustive selection-problem oracle: maximize the sum of n-i
/// above-diagonal entries whose row-index set and column-index set are
/// disjoint. Requires symmetric input and ceil((n-1)/2) < i <= n-1.
Rat selection_optimum(const ExactMatrix& a, int i);

/// Feasible split B = B1 + B2 with B1 monotone anti-Monge and B2 a
/// down-benevolent Toeplitz matrix, found by exact linear feasibility over
/// the n-1 profile values of B2. nullopt when no split exists.
struct Combined1Split {
    ExactMatrix b1;
    ExactMatrix b2;
    ToeplitzProfile profile;
};
std::optional<Combined1Split> split_combined1(const ExactMatrix& b);

/// Conic cone membership for the shifted-permuted ray families. The Monge
/// cone takes a constant offset; the cyclic Monge cone a full symmetric sum
/// part. Matching is off-diagonal (the partner matrices of every theorem
/// using these cones carry zero diagonals).
enum class PsCone { AntiMonge, Monge, CyclicMonge };

struct PsMembership {
    std::vector<PsTerm> terms;
    std::optional<Rat> constant;                // Monge
    std::optional<std::vector<Rat>> sum_alpha;  // CyclicMonge sum part alpha_i + beta_j
    std::optional<std::vector<Rat>> sum_beta;

    nlohmann::ordered_json to_json() const;
    /// Rebuilds the represented matrix (diagonal = 0s plus term diagonals).
    ExactMatrix reconstruct(int n) const;
};

std::optional<PsMembership> ps_cone_membership(const ExactMatrix& a, PsCone cone);

/// Tries every solvable case in a fixed, most-specific-first order:
///   combined_1, combined_2, combined_3, CDW_antimonge, DW_kalmanson_dw,
///   LS_robinson_simple, down_benevolent, up_benevolent_PS,
///   BCRW_antimonge_benevolent, PSmonge_down_benevolent.
/// combined_2 and combined_3 are tried only when b_split is supplied.
std::optional<CaseCertificate> detect_case(
    const ExactMatrix& a, const ExactMatrix& b,
    const std::optional<std::pair<ExactMatrix, ExactMatrix>>& b_split = std::nullopt);

/// Solution for a detected case; throws std::runtime_error when no case
/// applies (callers fall back to brute_force).
Solution solve_structured(const ExactMatrix& a, const ExactMatrix& b,
                          const std::optional<std::pair<ExactMatrix, ExactMatrix>>& b_split = std::nullopt);

}  // namespace qap
