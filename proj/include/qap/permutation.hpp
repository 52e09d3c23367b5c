#pragma once

#include <stdexcept>
#include <vector>

namespace qap {

/// Bijection on {1..n}, stored as the image list <p(1), ..., p(n)>.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        const int n = static_cast<int>(img_.size());
        if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : img_) {
            if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("images are not a bijection of {1..n}");
            seen[v - 1] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) img[i - 1] = i;
        return Permutation(std::move(img));
    }

    int n() const { return static_cast<int>(img_.size()); }

    /// p(i), 1-based.
    int operator()(int i) const { return img_[i - 1]; }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (img_[i - 1] != i) return false;
        return true;
    }

    bool operator==(const Permutation& other) const { return img_ == other.img_; }
    bool operator!=(const Permutation& other) const { return img_ != other.img_; }

private:
    std::vector<int> img_;
};

/// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw std::invalid_argument("permutation dimension mismatch");
    std::vector<int> img(static_cast<std::size_t>(p.n()));
    for (int i = 1; i <= p.n(); ++i) img[i - 1] = p(q(i));
    return Permutation(std::move(img));
}

inline Permutation invert(const Permutation& p) {
    std::vector<int> img(static_cast<std::size_t>(p.n()));
    for (int i = 1; i <= p.n(); ++i) img[p(i) - 1] = i;
    return Permutation(std::move(img));
}

}  // namespace qap
