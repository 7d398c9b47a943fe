#include <doctest.h>

#include <random>

#include "lp_brute.hpp"
#include "rejsched/lp.hpp"

using namespace rejsched;

TEST_CASE("single lower-bound constraint") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {Rational(1)};
    lp.add_row(Relation::Ge, Rational(5)).coeff[0] = Rational(1);
    VertexSolution v = solve(lp);
    REQUIRE(v.status == LpStatus::Optimal);
    CHECK(v.x[0] == Rational(5));
    CHECK(v.objective_value == Rational(5));
}

TEST_CASE("zero objective still returns a vertex") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {Rational(0), Rational(0)};
    auto& row = lp.add_row(Relation::Eq, Rational(1));
    row.coeff[0] = row.coeff[1] = Rational(1);
    VertexSolution v = solve(lp);
    REQUIRE(v.status == LpStatus::Optimal);
    bool vertex = (v.x[0] == Rational(1) && v.x[1] == Rational(0)) ||
                  (v.x[0] == Rational(0) && v.x[1] == Rational(1));
    CHECK(vertex);
}

TEST_CASE("infeasible and unbounded statuses") {
    LinearProgram bad;
    bad.num_vars = 1;
    bad.objective = {Rational(0)};
    bad.add_row(Relation::Le, Rational(-1)).coeff[0] = Rational(1);
    CHECK(solve(bad).status == LpStatus::Infeasible);

    LinearProgram unb;
    unb.num_vars = 1;
    unb.objective = {Rational(-1)};
    unb.add_row(Relation::Ge, Rational(0)).coeff[0] = Rational(1);
    CHECK(solve(unb).status == LpStatus::Unbounded);
}

TEST_CASE("equalities are satisfied exactly") {
    LinearProgram lp;
    lp.num_vars = 3;
    lp.objective = {Rational(2), Rational(3), Rational(1)};
    auto& r1 = lp.add_row(Relation::Eq, Rational(7, 3));
    r1.coeff = {Rational(1), Rational(1), Rational(1)};
    auto& r2 = lp.add_row(Relation::Ge, Rational(1, 2));
    r2.coeff = {Rational(0), Rational(1), Rational(0)};
    VertexSolution v = solve(lp);
    REQUIRE(v.status == LpStatus::Optimal);
    CHECK(v.x[0] + v.x[1] + v.x[2] == Rational(7, 3));
    CHECK(v.x[1] >= Rational(1, 2));
    CHECK(v.objective_value == testutil::brute_force_lp_opt(lp).value());
}

TEST_CASE("upper bounds fold into rows") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {Rational(-1), Rational(-1)};
    lp.upper = {Rational(2), Rational(3)};
    auto& row = lp.add_row(Relation::Le, Rational(4));
    row.coeff = {Rational(1), Rational(1)};
    VertexSolution v = solve(lp);
    REQUIRE(v.status == LpStatus::Optimal);
    CHECK(v.objective_value == Rational(-4));
    CHECK(v.x[0] + v.x[1] == Rational(4));
}

TEST_CASE("degenerate LP terminates under Bland") {
    // Classic cycling-prone instance (Beale); Bland must terminate.
    LinearProgram lp;
    lp.num_vars = 4;
    lp.objective = {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)};
    auto& r1 = lp.add_row(Relation::Le, Rational(0));
    r1.coeff = {Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)};
    auto& r2 = lp.add_row(Relation::Le, Rational(0));
    r2.coeff = {Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)};
    auto& r3 = lp.add_row(Relation::Le, Rational(1));
    r3.coeff = {Rational(0), Rational(0), Rational(1), Rational(0)};
    VertexSolution v = solve(lp);
    REQUIRE(v.status == LpStatus::Optimal);
    CHECK(v.objective_value == Rational(-1, 20));
}

TEST_CASE("simplex optimum matches brute-force vertex enumeration") {
    std::mt19937_64 rng(23);
    int solved = 0;
    for (int it = 0; it < 120; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        int rows = 1 + static_cast<int>(rng() % 3);
        LinearProgram lp;
        lp.num_vars = n;
        for (int j = 0; j < n; ++j)
            lp.objective.push_back(Rational(static_cast<long>(rng() % 11) - 5));
        // Box bounds keep the region bounded so the optimum is a vertex.
        lp.upper.assign(n, Rational(1 + static_cast<long>(rng() % 5)));
        for (int i = 0; i < rows; ++i) {
            Relation rel = rng() % 2 ? Relation::Le : Relation::Ge;
            auto& row = lp.add_row(rel, Rational(static_cast<long>(rng() % 9) - 2));
            for (int j = 0; j < n; ++j)
                row.coeff[j] = Rational(static_cast<long>(rng() % 7) - 3);
        }
        VertexSolution v = solve(lp);
        auto brute = testutil::brute_force_lp_opt(lp);
        if (v.status == LpStatus::Optimal) {
            REQUIRE(brute.has_value());
            CHECK(v.objective_value == *brute);
            ++solved;
        } else {
            CHECK(v.status == LpStatus::Infeasible);
            CHECK_FALSE(brute.has_value());
        }
    }
    CHECK(solved > 40);
}
