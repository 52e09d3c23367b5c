#pragma once

#include <random>
#include <string>

#include "qap/core.hpp"
#include "qap/io.hpp"
#include "qap/permutation.hpp"

namespace testutil {

inline qap::ExactMatrix fixture(const std::string& name) {
    return qap::read_matrix_file(std::string(QAPTK_DATA_DIR) + "/" + name + ".mat");
}

inline qap::ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    qap::ExactMatrix m(static_cast<int>(rows.size()));
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j) m.at(i, j) = rows[i - 1][j - 1];
    return m;
}

/// Independent double-sum oracle for the QAP objective; kept free of the
/// library evaluation path on purpose.
inline qap::Rat objective_oracle(const qap::ExactMatrix& a, const qap::ExactMatrix& b, const qap::Permutation& p) {
    qap::Rat z = 0;
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j) z += a.at(p(i), p(j)) * b.at(i, j);
    return z;
}

class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi) { return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    qap::Rat rational(int lo, int hi) {
        static const int dens[] = {1, 1, 2, 3};
        return qap::make_rat(uniform(lo, hi), dens[eng_() % 4]);
    }
    std::uint64_t raw() { return eng_(); }
    qap::Permutation permutation(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[i] = i + 1;
        for (int i = n - 1; i > 0; --i) std::swap(img[i], img[eng_() % static_cast<std::uint64_t>(i + 1)]);
        return qap::Permutation(std::move(img));
    }
    qap::ExactMatrix matrix(int n, int lo, int hi, bool symmetric) {
        qap::ExactMatrix m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = symmetric ? i : 1; j <= n; ++j) {
                m.at(i, j) = rational(lo, hi);
                if (symmetric) m.at(j, i) = m.at(i, j);
            }
        return m;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace testutil
