#include <doctest.h>

#include "clutterlab/lp.hpp"

using namespace clutterlab;

TEST_CASE("small optimum")
{
    // max x + y s.t. x + 2y ≤ 4, 3x + y ≤ 6
    LinearProgram lp;
    lp.num_vars = 2;
    lp.le_rows = {{1, 2}, {3, 1}};
    lp.le_rhs = {4, 6};
    lp.objective = {1, 1};
    auto r = solve_lp(lp);
    REQUIRE(r.status == LPResult::Status::optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x == RatVector{Rational(8, 5), Rational(6, 5)});
}

TEST_CASE("fractional optimum of the triangle packing")
{
    // max y1+y2+y3 s.t. each vertex lies in two edges with capacity 1
    LinearProgram lp;
    lp.num_vars = 3;
    lp.le_rows = {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
    lp.le_rhs = {1, 1, 1};
    lp.objective = {1, 1, 1};
    auto r = solve_lp(lp);
    REQUIRE(r.status == LPResult::Status::optimal);
    CHECK(r.value == Rational(3, 2));
}

TEST_CASE("infeasible and unbounded")
{
    LinearProgram inf;
    inf.num_vars = 1;
    inf.le_rows = {{1}};
    inf.le_rhs = {-1};
    CHECK(solve_lp(inf).status == LPResult::Status::infeasible);

    LinearProgram unb;
    unb.num_vars = 2;
    unb.le_rows = {{1, -1}};
    unb.le_rhs = {1};
    unb.objective = {1, 1};
    CHECK(solve_lp(unb).status == LPResult::Status::unbounded);
}

TEST_CASE("equalities with redundancy and negative right-hand sides")
{
    LinearProgram lp;
    lp.num_vars = 3;
    lp.eq_rows = {{1, 1, 1}, {2, 2, 2}, {-1, 0, 1}};
    lp.eq_rhs = {3, 6, -1};
    lp.objective = {0, 0, 1};
    auto r = solve_lp(lp);
    REQUIRE(r.status == LPResult::Status::optimal);
    CHECK(r.value == 1);
    CHECK(r.x[0] + r.x[1] + r.x[2] == 3);
    CHECK(r.x[2] - r.x[0] == -1);
}
