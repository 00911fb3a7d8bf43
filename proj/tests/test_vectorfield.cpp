#include <doctest.h>

#include "gmcd/picardfuchs.hpp"
#include "gmcd/vectorfield.hpp"

using namespace gmcd;

namespace {

RatFunc p(const std::string& s, const RingPtr& r) { return parse_ratfunc(s, r); }

}  // namespace

TEST_CASE("modular vector field for n = 1") {
  VectorField vf = derive_R(1);
  const auto& r = vf.ring;
  CHECK(vf.coords == std::vector<std::string>{"t1", "t2", "t3"});
  CHECK(vf["t1"] == p("(-3*c*t1*t2-(t1^3-t3))/(3*c)", r));
  CHECK(vf["t2"] == p("(t1*(t1^3-t3)-9*c^2*t2^2)/(9*c^2)", r));
  CHECK(vf["t3"] == p("-3*t2*t3", r));
  CHECK(vf.yukawa.empty());
  CHECK(vf.y(0, 1) == RatFunc(1));
  CHECK(vf.y(1, 0).is_zero());

  VectorField sp = specialize(vf, Rat(1, 27));
  const auto& q = sp.ring;
  CHECK(sp["t1"] == p("-t1*t2-9*(t1^3-t3)", q));
  CHECK(sp["t2"] == p("81*t1*(t1^3-t3)-t2^2", q));
  CHECK(sp["t3"] == p("-3*t2*t3", q));
}

TEST_CASE("modular vector field for n = 2") {
  VectorField vf = derive_R(2);
  const auto& r = vf.ring;
  CHECK(vf.coords == std::vector<std::string>{"t1", "t2", "t3", "t4"});
  CHECK(vf["t1"] == p("-t1*t2+t3", r));
  CHECK(vf["t2"] == p("-(t1^2+16*c*t2^2)/(32*c)", r));
  CHECK(vf["t3"] == p("-(16*c*t2*t3+t1^3)/(8*c)", r));
  CHECK(vf["t4"] == p("-4*t2*t4", r));
  CHECK(vf.yukawa.empty());

  VectorField sp = specialize(vf, Rat(-1, 64));
  const auto& q = sp.ring;
  CHECK(sp["t2"] == p("2*t1^2-t2^2/2", q));
  CHECK(sp["t3"] == p("8*t1^3-2*t2*t3", q));
  // t3^2 = 4 (t1^4 - t4)
  CHECK(p("t3^2", q) == p("4*(t1^4-t4)", q));
}

TEST_CASE("modular vector field for n = 4") {
  VectorField vf = derive_R(4);
  const auto& r = vf.ring;
  const std::string d = "(t1^6-t6)";
  CHECK(vf.coords.size() == 8);
  CHECK(vf["t1"] == p("t3-t1*t2", r));
  CHECK(vf["t2"] == p("(1296*c*t3^2*t4*t8-t1^6*t2^2+t2^2*t6)/" + d, r));
  CHECK(vf["t3"] == p("(1296*c*t3^2*t5*t8-3*t1^6*t2*t3+3*t2*t3*t6)/" + d, r));
  CHECK(vf["t4"] == p("(-1296*c*t3^2*t7*t8-t1^6*t2*t4+t2*t4*t6)/" + d, r));
  CHECK(vf["t5"] == p("(1296*c*t3*t5^2*t8-4*t1^6*t2*t5-2*t1^6*t3*t4+5*t1^4*t3*t8+4*t2*t5*t6+"
                      "2*t3*t4*t6)/(2*" + d + ")", r));
  CHECK(vf["t6"] == p("-6*t2*t6", r));
  CHECK(vf["t7"] == p("(1296*c*t4^2-t1^2)/(2592*c)", r));
  CHECK(vf["t8"] == p("(-3*t1^6*t2*t8+3*t1^5*t3*t8+3*t2*t6*t8)/" + d, r));

  REQUIRE(vf.yukawa.size() == 2);
  CHECK(vf.yukawa[0].pow(2) == p("1296*c*t3^4/" + d, r));
  CHECK(vf.yukawa[1].pow(2) == p("1296*c*t3^4/" + d, r));
  CHECK((vf.yukawa[0] + vf.yukawa[1]).is_zero());
}

TEST_CASE("Yukawa function for n = 3") {
  TcheckSolution ts = solve_tcheck(3);
  VectorField vf = derive_R(3, ts, gm_matrix(3));
  REQUIRE(vf.yukawa.size() == 1);
  const auto& r = vf.ring;
  // Y_{i-1} = t3 s_ii / s_{i+1,i+1}
  CHECK(vf.yukawa[0] == RatFunc::var(r, "t3") * ts.s(1, 1) / ts.s(2, 2));
  // odd-case closed form with the middle diagonal entry squared
  CHECK(vf.yukawa[0] == p("125*c*t3*t3^2/(t1^5-t5)", r));
}

TEST_CASE("theorem constraints and covariant derivative") {
  for (int n = 1; n <= 4; ++n) {
    TcheckSolution ts = solve_tcheck(n);
    ConnectionMatrix gm = gm_matrix(n);
    VectorField vf = derive_R(n, ts, gm);
    TheoremReport rep = check_theorem_constraints(vf, ts);
    CHECK(rep.shape);
    CHECK(rep.symplectic);
    CHECK(rep.tangent);
    CHECK(rep.failures.empty());

    // sum over coordinates of R_x A_x reproduces Y
    ConnectionMatrix a = enhanced_connection(ts.s, gm, vf.coords);
    CHECK(all_zero(SymMat(a.contract(vf.comps) - vf.y)));

    // denominators: monomials and the discriminant only
    for (const auto& f : vf.comps) CHECK(f.den().size() <= 1);
  }
  SUBCASE("perturbed Y breaks the constraints") {
    TcheckSolution ts = solve_tcheck(4);
    VectorField vf = derive_R(4, ts, gm_matrix(4));
    vf.y(1, 2) = vf.y(1, 2) * RatFunc(2);
    TheoremReport rep = check_theorem_constraints(vf, ts);
    CHECK_FALSE(rep.symplectic);
    CHECK_FALSE(rep.tangent);
  }
}

TEST_CASE("Y shapes in low dimension") {
  VectorField v2 = derive_R(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int e = (i == 0 && j == 1) ? 1 : (i == 1 && j == 2) ? -1 : 0;
      CHECK(v2.y(i, j) == RatFunc(e));
    }
}
