#pragma once

#include <cassert>
#include <vector>

#include "qap/rational.hpp"

namespace qap {

/// Dense square matrix of exact rationals. Indices are 1-based, matching the
/// conventions used throughout the external file and report formats.
class ExactMatrix {
public:
    explicit ExactMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    int n() const { return n_; }

    Rat& at(int i, int j) {
        assert(1 <= i && i <= n_ && 1 <= j && j <= n_);
        return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }
    const Rat& at(int i, int j) const {
        assert(1 <= i && i <= n_ && 1 <= j && j <= n_);
        return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    bool is_symmetric() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    /// True when every diagonal entry equals the first one.
    bool has_constant_diagonal() const {
        for (int i = 2; i <= n_; ++i)
            if (at(i, i) != at(1, 1)) return false;
        return true;
    }

    ExactMatrix transposed() const {
        ExactMatrix t(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const ExactMatrix& other) const { return n_ == other.n_ && a_ == other.a_; }
    bool operator!=(const ExactMatrix& other) const { return !(*this == other); }

    /// Entrywise equality outside the main diagonal.
    bool equals_off_diagonal(const ExactMatrix& other) const {
        if (n_ != other.n_) return false;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && at(i, j) != other.at(i, j)) return false;
        return true;
    }

    ExactMatrix& operator+=(const ExactMatrix& other) {
        require_same_dim(other);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
        return *this;
    }
    ExactMatrix& operator-=(const ExactMatrix& other) {
        require_same_dim(other);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
        return *this;
    }
    ExactMatrix& operator*=(const Rat& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const Rat& s, ExactMatrix a) { return a *= s; }

    ExactMatrix operator-() const {
        ExactMatrix r(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
        return r;
    }

private:
    void require_same_dim(const ExactMatrix& other) const {
        if (n_ != other.n_) throw std::invalid_argument("matrix dimension mismatch");
    }

    int n_;
    std::vector<Rat> a_;
};

}  // namespace qap
