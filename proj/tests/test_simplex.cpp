#include <doctest.h>

#include "lcn/simplex.hpp"

using namespace lcn;

TEST_CASE("two-variable LP with known optimum and duals") {
    // min x + y  s.t.  x + 2y >= 3,  2x + y >= 3
    LpProblem p;
    p.add_row(Sense::ge, rat(3));
    p.add_row(Sense::ge, rat(3));
    p.add_col(rat(1), {{0, rat(1)}, {1, rat(2)}});
    p.add_col(rat(1), {{0, rat(2)}, {1, rat(1)}});
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == rat(2));
    CHECK(s.x[0] == rat(1));
    CHECK(s.x[1] == rat(1));
    // strong duality: y . b = objective
    CHECK(s.y[0] * 3 + s.y[1] * 3 == s.objective);
    CHECK(s.y[0] >= 0);
    CHECK(s.y[1] >= 0);
}

TEST_CASE("equality and le rows") {
    // min 2x + 3y  s.t.  x + y = 4,  x <= 3
    LpProblem p;
    p.add_row(Sense::eq, rat(4));
    p.add_row(Sense::le, rat(3));
    p.add_col(rat(2), {{0, rat(1)}, {1, rat(1)}});
    p.add_col(rat(3), {{0, rat(1)}});
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == rat(9));  // x = 3, y = 1
    CHECK(s.x[0] == rat(3));
    CHECK(s.x[1] == rat(1));
    CHECK(s.y[0] * 4 + s.y[1] * 3 == s.objective);
}

TEST_CASE("infeasible and unbounded detection") {
    LpProblem inf;
    inf.add_row(Sense::ge, rat(2));
    inf.add_row(Sense::le, rat(1));
    inf.add_col(rat(1), {{0, rat(1)}, {1, rat(1)}});
    CHECK(solve_lp(inf).status == LpStatus::infeasible);

    LpProblem unb;
    unb.add_row(Sense::ge, rat(1));
    unb.add_col(rat(-1), {{0, rat(1)}});
    CHECK(solve_lp(unb).status == LpStatus::unbounded);
}

TEST_CASE("negative right-hand sides normalize correctly") {
    // min x  s.t.  -x <= -2   (i.e. x >= 2)
    LpProblem p;
    p.add_row(Sense::le, rat(-2));
    p.add_col(rat(1), {{0, rat(-1)}});
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == rat(2));
    CHECK(s.y[0] * -2 == s.objective);
}

TEST_CASE("degenerate LP terminates under Bland's rule") {
    // a classic cycling-prone instance; Bland must terminate at 0
    LpProblem p;
    p.add_row(Sense::le, rat(0));
    p.add_row(Sense::le, rat(0));
    p.add_row(Sense::le, rat(1));
    p.add_col(rat(-3, 4), {{0, rat(1, 4)}, {1, rat(1, 2)}, {2, rat(0)}});
    p.add_col(rat(150), {{0, rat(-60)}, {1, rat(-90)}, {2, rat(0)}});
    p.add_col(rat(-1, 50), {{0, rat(-1, 25)}, {1, rat(-1, 50)}, {2, rat(1)}});
    p.add_col(rat(6), {{0, rat(9)}, {1, rat(3)}, {2, rat(0)}});
    LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == rat(-1, 20));
}

TEST_CASE("exact rationals, no drift") {
    // min x  s.t.  3x >= 1 -> x = 1/3 exactly
    LpProblem p;
    p.add_row(Sense::ge, rat(1));
    p.add_col(rat(1), {{0, rat(3)}});
    LpSolution s = solve_lp(p);
    CHECK(s.x[0] == rat(1, 3));
    CHECK(s.objective == rat(1, 3));
}
