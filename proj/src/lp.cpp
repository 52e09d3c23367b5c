#include "qap/lp.hpp"

#include <stdexcept>

namespace qap::lp {

namespace {

// Dense phase-1 tableau. Columns: structural variables (free variables split
// into x+ - x-), slacks, artificials, then the right-hand side.
class Tableau {
public:
    Tableau(int rows, int cols) : rows_(rows), cols_(cols), t_(static_cast<std::size_t>(rows) * cols) {}

    Rat& at(int r, int c) { return t_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return t_[static_cast<std::size_t>(r) * cols_ + c]; }

    void pivot(int pr, int pc) {
        const Rat inv = 1 / at(pr, pc);
        for (int c = 0; c < cols_; ++c) at(pr, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            const Rat factor = at(r, pc);
            if (factor == 0) continue;
            for (int c = 0; c < cols_; ++c) at(r, c) -= factor * at(pr, c);
        }
    }

private:
    int rows_, cols_;
    std::vector<Rat> t_;
};

}  // namespace

std::optional<std::vector<Rat>> find_feasible(int num_free, int num_nonneg,
                                              const std::vector<Constraint>& constraints) {
    const int v = num_free + num_nonneg;
    const int m = static_cast<int>(constraints.size());
    int num_slacks = 0;
    for (const auto& c : constraints) {
        if (static_cast<int>(c.coef.size()) != v) throw std::invalid_argument("lp: coefficient width mismatch");
        if (c.rel != Rel::Eq) ++num_slacks;
    }
    const int structurals = 2 * num_free + num_nonneg;
    const int cols = structurals + num_slacks + m + 1;  // + artificials + rhs
    const int rhs_col = cols - 1;
    Tableau t(m + 1, cols);  // last row = phase-1 objective

    int slack_idx = 0;
    for (int r = 0; r < m; ++r) {
        const auto& c = constraints[r];
        // Fill structural columns: free var j -> columns 2j (plus part) and
        // 2j+1 (minus part).
        for (int j = 0; j < num_free; ++j) {
            t.at(r, 2 * j) = c.coef[j];
            t.at(r, 2 * j + 1) = -c.coef[j];
        }
        for (int j = 0; j < num_nonneg; ++j) t.at(r, 2 * num_free + j) = c.coef[num_free + j];
        if (c.rel != Rel::Eq) {
            t.at(r, structurals + slack_idx) = c.rel == Rel::Le ? 1 : -1;
            ++slack_idx;
        }
        t.at(r, rhs_col) = c.rhs;
        if (t.at(r, rhs_col) < 0)
            for (int col = 0; col < cols; ++col) t.at(r, col) = -t.at(r, col);
        t.at(r, structurals + num_slacks + r) = 1;  // artificial, basic
    }
    // Phase-1 objective: minimize sum of artificials => objective row =
    // -(sum of constraint rows) over non-artificial columns.
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        basis[r] = structurals + num_slacks + r;
        for (int c = 0; c < cols; ++c)
            if (c < structurals + num_slacks || c == rhs_col) t.at(m, c) -= t.at(r, c);
    }

    while (true) {
        // Bland: entering column = smallest index with negative reduced cost.
        // Artificials never re-enter.
        int pc = -1;
        for (int c = 0; c < structurals + num_slacks; ++c)
            if (t.at(m, c) < 0) {
                pc = c;
                break;
            }
        if (pc < 0) break;
        // Leaving row: min ratio, ties by smallest basis variable index.
        int pr = -1;
        Rat best_ratio;
        for (int r = 0; r < m; ++r) {
            if (t.at(r, pc) <= 0) continue;
            Rat ratio = t.at(r, rhs_col) / t.at(r, pc);
            if (pr < 0 || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[pr])) {
                pr = r;
                best_ratio = ratio;
            }
        }
        if (pr < 0) throw std::logic_error("lp: phase-1 objective unbounded");  // cannot happen
        t.pivot(pr, pc);
        basis[pr] = pc;
    }

    if (t.at(m, rhs_col) != 0) return std::nullopt;  // objective = -sum(artificials)

    std::vector<Rat> structural_values(static_cast<std::size_t>(structurals + num_slacks), Rat(0));
    for (int r = 0; r < m; ++r)
        if (basis[r] < structurals + num_slacks) structural_values[static_cast<std::size_t>(basis[r])] = t.at(r, rhs_col);
    std::vector<Rat> x(static_cast<std::size_t>(v));
    for (int j = 0; j < num_free; ++j) x[j] = structural_values[2 * j] - structural_values[2 * j + 1];
    for (int j = 0; j < num_nonneg; ++j) x[num_free + j] = structural_values[2 * num_free + j];
    return x;
}

}  // namespace qap::lp
