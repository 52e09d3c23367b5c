#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qap/matrix.hpp"
#include "qap/permutation.hpp"
#include "qap/recognizers.hpp"

#include <nlohmann/json.hpp>

namespace qap {

/// Supnick permutation <1,3,5,...,6,4,2>: odd values ascending, then even
/// values descending.
Permutation supnick_permutation(int n);

/// sigma_u = <u, u+1, ..., n, 1, ..., u-1>, i.e. sigma_u(i) = ((u-1+i-1) mod n)+1.
Permutation cyclic_shift(int n, int u);

/// Extremal rays of the (symmetric) monotone anti-Monge cone.
/// Non-symmetric mode: R^(p,q) = 1 on the bottom-right p x q corner, 0
/// elsewhere. Symmetric mode: R^(p,q) + R^(q,p) for p < q, R^(p,p) for p = q.
ExactMatrix extremal_anti_monge(int n, int p, int q, bool symmetric);

/// Shifted-permuted ray parameters. In non-cyclic mode u must keep the
/// nonzero cross of the permuted ray from wrapping around the matrix border;
/// cyclic mode admits any 1 <= u <= n.
struct RaySpec {
    int n = 0;
    int p = 0, q = 0;
    int u = 1;
    bool cyclic = false;

    void validate() const;
    /// All admissible shift values for (n, p, q) in the given mode.
    static std::vector<int> admissible_shifts(int n, int p, int q, bool cyclic);
};

/// C^(p,q,u) = apply_permutation(apply_permutation(Rbar^(p,q), pi*), sigma_u),
/// built by permutation composition (the closed-form index arithmetic is a
/// cross-check only).
ExactMatrix ps_ray(const RaySpec& spec);

/// The closed-form cell values for Rbar^(p,q) permuted by the Supnick
/// permutation: a "cross" with 2s at the center and 1-arms. The strip widths
/// are parity-exact (left arm = number of odd values in [n-q+1, n-p]).
ExactMatrix ps_ray_closed_form(int n, int p, int q);

enum class PsKind { AntiMonge, Monge };

struct PsTerm {
    Rat weight;
    RaySpec spec;
};

/// anti_monge: sum of weight * ps_ray. monge: the negation of that plus an
/// optional sum matrix alpha_i + beta_j.
ExactMatrix ps_matrix(const std::vector<PsTerm>& terms, PsKind kind,
                      const std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>>& sum_part = std::nullopt);

/// 0/1 Toeplitz stripe with ones exactly at |row - col| = i; defined for
/// ceil((n-1)/2) < i <= n-1 and carrying exactly 2(n-i) ones.
ExactMatrix stripe_matrix(int n, int i);

ExactMatrix toeplitz_from_profile(const ToeplitzProfile& f);
ExactMatrix cut_matrix_from_blocks(const BlockPartition& blocks);

/// Deterministic seeded member of a named matrix class, together with the
/// generating parameters as JSON (profile, blocks, ray terms, weights).
/// Classes: robinson, kalmanson, robinson_kalmanson, cdw_conic,
/// monotone_anti_monge, symmetric_monotone_anti_monge, up_benevolent,
/// down_benevolent, dw_toeplitz, simple_toeplitz, ps_anti_monge, ps_monge,
/// cyclic_ps_monge.
struct GeneratedInstance {
    ExactMatrix matrix;
    nlohmann::ordered_json params;
};

GeneratedInstance random_instance(std::string_view class_name, int n, std::uint64_t seed);

std::vector<std::string> random_instance_classes();

}  // namespace qap
