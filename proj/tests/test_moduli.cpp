#include <doctest.h>

#include "gmcd/intersection.hpp"
#include "gmcd/moduli.hpp"
#include "gmcd/picardfuchs.hpp"

using namespace gmcd;

TEST_CASE("constant intersection matrix") {
  RatMat p1 = phi(1);
  CHECK(p1(0, 1) == Rat(1));
  CHECK(p1(1, 0) == Rat(-1));
  CHECK(p1(0, 0).is_zero());
  RatMat p2 = phi(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(p2(i, j) == Rat(i + j == 2 ? 1 : 0));
  RatMat p3 = phi(3);
  // [[0, J2], [-J2, 0]]
  CHECK(p3(0, 3) == Rat(1));
  CHECK(p3(1, 2) == Rat(1));
  CHECK(p3(2, 1) == Rat(-1));
  CHECK(p3(3, 0) == Rat(-1));
  for (int n = 1; n <= 9; ++n) {
    RatMat p = phi(n);
    RatMat sgn = p.transpose() * Rat(n % 2 == 0 ? 1 : -1);
    CHECK(p == sgn);
    // nondegenerate, one unit per row
    for (int i = 0; i <= n; ++i) {
      int nz = 0;
      for (int j = 0; j <= n; ++j) nz += p(i, j).is_zero() ? 0 : 1;
      CHECK(nz == 1);
    }
  }
}

TEST_CASE("enhanced moduli dimension") {
  CHECK(dim_T(1) == 3);
  CHECK(dim_T(2) == 3);
  CHECK(dim_T(3) == 7);
  CHECK(dim_T(4) == 7);
  CHECK(dim_T(5) == 13);
}

TEST_CASE("parameter layout") {
  SLayout l1 = s_layout(1);
  CHECK(l1.rows[1][1].name() == "ť1");
  CHECK(l1.rows[1][0].name() == "t2");
  SLayout l3 = s_layout(3);
  CHECK(l3.rows[2][1].name() == "t6");
  SLayout l4 = s_layout(4);
  CHECK(l4.rows[4][0].name() == "ť9");
  CHECK(l4.position("t8") == std::make_pair(2, 2));
  CHECK_THROWS_AS(s_layout(5), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    SLayout l = s_layout(n);
    CHECK(static_cast<int>(l.coordinates().size()) - (l.promoted ? 1 : 0) == dim_T(n));
    CHECK(static_cast<int>(l.dependents().size()) == (n + 1) * (n + 2) / 2 + 1 - dim_T(n));
    CHECK(l.rows[0][0].kind == LayoutCell::Kind::One);
  }
}

namespace {

RatFunc p(const char* s, const RingPtr& r) { return parse_ratfunc(s, r); }

}  // namespace

TEST_CASE("dependent parameters for n = 1") {
  TcheckSolution sol = solve_tcheck(1);
  REQUIRE(sol.assignments.size() == 1);
  CHECK(sol.value(1) == p("-(t1^3-t3)/(3*c)", sol.ring));
  CHECK_FALSE(sol.root);
}

TEST_CASE("dependent parameters for n = 2") {
  TcheckSolution sol = solve_tcheck(2);
  REQUIRE(sol.root);
  const auto& r = sol.ring;
  CHECK(r->name(sol.root->var) == "t3");
  CHECK(RatFunc(MPoly(r, sol.root->value)) == p("-(t1^4-t4)/(16*c)", r));
  CHECK(sol.value(1) == p("(t1^4-t4)/(16*c)", r));
  CHECK(sol.value(3) == p("(-16*c*t2*t3+2*t1^3)/(16*c)", r));
  CHECK(sol.value(4) == p("(-16*c*t2^2+t1^2)/(32*c)", r));
  CHECK(sol.assignments.size() == 3);
}

TEST_CASE("dependent parameters for n = 4") {
  TcheckSolution sol = solve_tcheck(4);
  REQUIRE(sol.root);
  const auto& r = sol.ring;
  CHECK(r->name(sol.root->var) == "t8");
  CHECK(RatFunc(MPoly(r, sol.root->value)) == p("(t1^6-t6)/(1296*c)", r));
  CHECK(sol.value(1) == p("(t1^6-t6)/(1296*c)", r));
  CHECK(sol.value(2) == p("-(t1^6-t6)/(1296*c*t3)", r));
  CHECK(sol.value(4) == p("(t1^6*t2+9*t1^5*t3-t2*t6)/(1296*c*t3)", r));
  CHECK(sol.value(5) == p("(-432*c*t5*t8-t1^5)/(432*c*t3)", r));
  CHECK(sol.value(6) ==
        p("(1296*c*t2*t5*t8-1296*c*t3*t4*t8+3*t1^5*t2+20*t1^4*t3)/(1296*c*t3)", r));
  CHECK(sol.value(7) == p("(-1296*c*t5^2-5*t1^4)/(2592*c*t3)", r));
  CHECK(sol.value(8) ==
        p("(1296*c*t2*t5^2-2592*c*t3^2*t7-2592*c*t3*t4*t5+5*t1^4*t2+20*t1^3*t3)/(2592*c*t3)", r));
  CHECK(sol.value(9) == p("(-2592*c*t2*t7-1296*c*t4^2+t1^2)/(2592*c)", r));
}

TEST_CASE("period relation holds identically") {
  for (int n = 1; n <= 4; ++n) {
    TcheckSolution sol = solve_tcheck(n);
    CHECK(all_zero(period_residual(sol.s, sol.omega)));
    CHECK(sol.assignments.size() + (sol.root ? 1 : 0) == s_layout(n).dependents().size());
    // diagonal pairing s_ii s_{n+2-i,n+2-i} is fixed by the discriminant
    RatFunc d = RatFunc::var(sol.ring, "t1").pow(n + 2) - RatFunc::var(sol.ring, tname(n + 2));
    RatFunc k = RatFunc(Rat(n + 2).pow(n)) * RatFunc::var(sol.ring, "c");
    for (int i = 0; i <= n; ++i) {
      RatFunc prod = sol.s(i, i) * sol.s(n - i, n - i);
      if (n % 2 == 0) {
        int sgn = (n + i + 2) % 2 == 0 ? 1 : -1;
        CHECK(prod == RatFunc(sgn) * d / k);
      } else {
        CHECK((prod == d / k || prod == -d / k));
      }
    }
    // denominators are only monomials and the discriminant
    for (const auto& [idx, v] : sol.assignments) CHECK(v.den().size() <= 1);
  }
}

TEST_CASE("specialized constant") {
  TcheckSolution sol = solve_tcheck(1, omega_matrix(1, Rat(1, 27)));
  CHECK(sol.value(1) == p("-9*(t1^3-t3)", sol.ring));
  TcheckSolution sol2 = solve_tcheck(2, omega_matrix(2, Rat(-1, 64)));
  CHECK(RatFunc(MPoly(sol2.ring, sol2.root->value)) == p("4*(t1^4-t4)", sol2.ring));
}
