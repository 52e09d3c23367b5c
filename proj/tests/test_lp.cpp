#include <doctest.h>

#include "qap/lp.hpp"
#include "test_util.hpp"

using namespace qap;
using lp::Constraint;
using lp::Rel;

namespace {

// Independent Fourier-Motzkin feasibility oracle over <= constraints with
// free variables. Exponential, fine for the sizes tested here.
bool fm_feasible(int vars, std::vector<std::vector<Rat>> rows) {
    // rows: coef_0..coef_{vars-1}, rhs; all constraints are sum <= rhs.
    for (int v = vars - 1; v >= 0; --v) {
        std::vector<std::vector<Rat>> lower, upper, rest;
        for (auto& r : rows) {
            if (r[static_cast<std::size_t>(v)] > 0)
                upper.push_back(r);
            else if (r[static_cast<std::size_t>(v)] < 0)
                lower.push_back(r);
            else
                rest.push_back(r);
        }
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // combine: eliminate v
                std::vector<Rat> merged(static_cast<std::size_t>(vars) + 1);
                const Rat a = -lo[static_cast<std::size_t>(v)];  // > 0
                const Rat b = up[static_cast<std::size_t>(v)];   // > 0
                for (int k = 0; k <= vars; ++k)
                    merged[static_cast<std::size_t>(k)] =
                        lo[static_cast<std::size_t>(k)] * b + up[static_cast<std::size_t>(k)] * a;
                merged[static_cast<std::size_t>(v)] = 0;
                rest.push_back(std::move(merged));
            }
        rows = std::move(rest);
    }
    for (const auto& r : rows)
        if (r.back() < 0) return false;
    return true;
}

std::vector<std::vector<Rat>> to_le_rows(int vars, const std::vector<Constraint>& cons) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& c : cons) {
        std::vector<Rat> le(static_cast<std::size_t>(vars) + 1);
        for (int k = 0; k < vars; ++k) le[static_cast<std::size_t>(k)] = c.coef[static_cast<std::size_t>(k)];
        le.back() = c.rhs;
        if (c.rel == Rel::Le) {
            rows.push_back(le);
        } else if (c.rel == Rel::Ge) {
            for (auto& x : le) x = -x;
            rows.push_back(le);
        } else {
            rows.push_back(le);
            auto neg = le;
            for (auto& x : neg) x = -x;
            rows.push_back(neg);
        }
    }
    return rows;
}

}  // namespace

TEST_CASE("simplex feasibility: hand-checked systems") {
    // x + y = 3, x - y = 1, x,y free -> (2,1)
    std::vector<Constraint> eq{{{1, 1}, Rel::Eq, 3}, {{1, -1}, Rel::Eq, 1}};
    auto sol = lp::find_feasible(2, 0, eq);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 1);

    // Infeasible: x >= 1, x <= 0 (x nonneg).
    std::vector<Constraint> bad{{{1}, Rel::Ge, 1}, {{1}, Rel::Le, 0}};
    CHECK_FALSE(lp::find_feasible(0, 1, bad).has_value());

    // w1 + w2 = 2, w1 - w2 = 3 with w >= 0 is infeasible (w2 < 0 forced).
    std::vector<Constraint> neg{{{1, 1}, Rel::Eq, 2}, {{1, -1}, Rel::Eq, 3}};
    CHECK_FALSE(lp::find_feasible(0, 2, neg).has_value());

    // Same system with free variables is feasible.
    auto sol2 = lp::find_feasible(2, 0, neg);
    REQUIRE(sol2.has_value());
    CHECK((*sol2)[0] == Rat(5, 2));
    CHECK((*sol2)[1] == Rat(-1, 2));
}

TEST_CASE("simplex solutions satisfy every constraint") {
    testutil::TestRng rng(401);
    int feas = 0, infeas = 0;
    for (int t = 0; t < 400; ++t) {
        int vars = rng.uniform(1, 5);
        int rows = rng.uniform(1, 7);
        std::vector<Constraint> cons;
        for (int r = 0; r < rows; ++r) {
            Constraint c;
            for (int k = 0; k < vars; ++k) c.coef.push_back(rng.rational(-3, 3));
            c.rel = t % 3 == 0 ? Rel::Eq : (rng.raw() % 2 ? Rel::Le : Rel::Ge);
            c.rhs = rng.rational(-4, 4);
            cons.push_back(std::move(c));
        }
        int num_free = rng.uniform(0, vars);
        auto sol = lp::find_feasible(num_free, vars - num_free, cons);
        if (!sol) {
            ++infeas;
            continue;
        }
        ++feas;
        for (int k = num_free; k < vars; ++k) REQUIRE((*sol)[static_cast<std::size_t>(k)] >= 0);
        for (const auto& c : cons) {
            Rat lhs = 0;
            for (int k = 0; k < vars; ++k) lhs += c.coef[static_cast<std::size_t>(k)] * (*sol)[static_cast<std::size_t>(k)];
            switch (c.rel) {
                case Rel::Le: REQUIRE(lhs <= c.rhs); break;
                case Rel::Ge: REQUIRE(lhs >= c.rhs); break;
                case Rel::Eq: REQUIRE(lhs == c.rhs); break;
            }
        }
    }
    CHECK(feas > 0);
    CHECK(infeas > 0);
}

TEST_CASE("simplex verdict agrees with fourier-motzkin on free-variable systems") {
    testutil::TestRng rng(409);
    int feas = 0, infeas = 0;
    for (int t = 0; t < 300; ++t) {
        int vars = rng.uniform(1, 4);
        int rows = rng.uniform(1, 6);
        std::vector<Constraint> cons;
        for (int r = 0; r < rows; ++r) {
            Constraint c;
            for (int k = 0; k < vars; ++k) c.coef.push_back(rng.rational(-3, 3));
            c.rel = rng.raw() % 4 == 0 ? Rel::Eq : Rel::Le;
            c.rhs = rng.rational(-4, 4);
            cons.push_back(std::move(c));
        }
        bool simplex = lp::find_feasible(vars, 0, cons).has_value();
        bool fm = fm_feasible(vars, to_le_rows(vars, cons));
        REQUIRE(simplex == fm);
        (simplex ? feas : infeas) += 1;
    }
    CHECK(feas > 0);
    CHECK(infeas > 0);
}
