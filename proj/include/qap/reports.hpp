#pragma once

#include <nlohmann/json.hpp>

#include "qap/decomposition.hpp"
#include "qap/permutation.hpp"
#include "qap/recognizers.hpp"

namespace qap {

/// JSON encoders shared by the CLI and the Python bindings. Rationals
/// serialize as bare integers when they fit in 64 bits and as "p/q" strings
/// otherwise, preserving exactness.
namespace reports {

nlohmann::ordered_json rational(const Rat& v);
nlohmann::ordered_json rationals(const std::vector<Rat>& v);
nlohmann::ordered_json witness(const Witness& w);
nlohmann::ordered_json verdict(const Verdict& v);
nlohmann::ordered_json toeplitz_profile(const ToeplitzProfile& p);
nlohmann::ordered_json block_partition(const BlockPartition& p);
nlohmann::ordered_json permutation(const Permutation& p);
nlohmann::ordered_json classification(const ClassificationReport& r);
nlohmann::ordered_json conic_decomposition(const ConicDecomposition& d);

}  // namespace reports

}  // namespace qap
