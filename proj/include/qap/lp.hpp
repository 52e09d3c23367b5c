#pragma once

#include <optional>
#include <vector>

#include "qap/rational.hpp"

namespace qap {

/// Exact linear feasibility over the rationals. Complete: phase-1 simplex
/// with Bland's rule, so it terminates and never reports a wrong verdict.
namespace lp {

enum class Rel { Le, Ge, Eq };

struct Constraint {
    std::vector<Rat> coef;  // one coefficient per variable
    Rel rel = Rel::Le;
    Rat rhs;
};

/// Variables 0..num_free-1 are unrestricted, the remaining num_nonneg are
/// >= 0. Returns a feasible assignment for all variables, or nullopt.
std::optional<std::vector<Rat>> find_feasible(int num_free, int num_nonneg, const std::vector<Constraint>& constraints);

}  // namespace lp

}  // namespace qap
