#pragma once

#include "qap/matrix.hpp"
#include "qap/permutation.hpp"

namespace qap {

/// Z_p(A,B) = sum_{i,j} A[p(i),p(j)] * B[i,j], exactly.
inline Rat qap_objective(const ExactMatrix& A, const ExactMatrix& B, const Permutation& p) {
    if (A.n() != B.n() || A.n() != p.n()) throw std::invalid_argument("qap_objective: dimension mismatch");
    const int n = A.n();
    Rat z = 0;
    Rat term;
    for (int i = 1; i <= n; ++i) {
        const int pi = p(i);
        for (int j = 1; j <= n; ++j) {
            term = A.at(pi, p(j));
            term *= B.at(i, j);
            z += term;
        }
    }
    return z;
}

/// A^p with (A^p)[i,j] = A[p(i),p(j)]  (simultaneous row/column permutation).
inline ExactMatrix apply_permutation(const ExactMatrix& A, const Permutation& p) {
    if (A.n() != p.n()) throw std::invalid_argument("apply_permutation: dimension mismatch");
    const int n = A.n();
    ExactMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.at(i, j) = A.at(p(i), p(j));
    return r;
}

}  // namespace qap
