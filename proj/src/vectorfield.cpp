#include "gmcd/vectorfield.hpp"

#include <stdexcept>

#include "gmcd/intersection.hpp"
#include "gmcd/picardfuchs.hpp"

namespace gmcd {

const RatFunc& VectorField::operator[](const std::string& coord) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == coord) return comps[i];
  throw std::out_of_range("VectorField: no component " + coord);
}

RatFunc VectorField::apply(const RatFunc& f) const {
  RatFunc out(0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!f.ring() || !f.ring()->find(coords[k])) continue;
    RatFunc d = f.derivative(coords[k]);
    if (!d.is_zero()) out += comps[k] * d;
  }
  return out;
}

namespace {

std::string sname(int i, int j) { return "s" + std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

VectorField derive_R(int n, const TcheckSolution& tsol, const ConnectionMatrix& gm) {
  const int size = n + 1;
  const std::string tn = tname(n + 2);

  // free lower-triangular S with s11 = 1
  std::vector<std::string> names{"t1", tn, "c"};
  for (int i = 1; i < size; ++i)
    for (int j = 0; j <= i; ++j) names.push_back(sname(i, j));
  auto bare = Ring::make(names);
  MPoly dpoly = MPoly::var(bare, "t1").pow(n + 2) - MPoly::var(bare, tn);
  RingPtr ext = Ring::make(names, {}, {dpoly.terms()});

  SymMat s = zeros<RatFunc>(size, size);
  s(0, 0) = RatFunc(MPoly(ext, Rat(1)));
  for (int i = 1; i < size; ++i)
    for (int j = 0; j <= i; ++j) s(i, j) = RatFunc::var(ext, sname(i, j));

  SymMat sa1 = mul<RatFunc>(s, embed(gm["t1"], ext));
  SymMat san = mul<RatFunc>(s, embed(gm[tn], ext));

  // first row: Sdot(1,1) = Sdot(1,2) = 0 fixes t1dot and t<n+2>dot
  SymMat lhs(2, 2), rhs(2, 1);
  for (int j = 0; j < 2; ++j) {
    lhs(j, 0) = sa1(0, j);
    lhs(j, 1) = san(0, j);
    rhs(j, 0) = s(1, j);
  }
  SymMat dt = solve<RatFunc>(lhs, rhs);
  SymMat sar = sa1 * dt(0, 0) + san * dt(1, 0);

  SymMat y = zeros<RatFunc>(size, size);
  y(0, 1) = RatFunc(1);
  for (int i = 1; i + 1 < n; ++i) y(i, i + 1) = sar(i, i + 1) / s(i + 1, i + 1);
  if (n >= 2) y(n - 1, n) = RatFunc(-1);

  SymMat sdot = mul<RatFunc>(y, s) - sar;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      if (n >= 2 && i == n - 1 && j == n) continue;
      if (!sdot(i, j).is_zero())
        throw ModelError("derive_R: upper entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") does not vanish");
    }

  // restriction to the solved parameters
  std::map<std::string, RatFunc> restrict;
  for (int i = 1; i < size; ++i)
    for (int j = 0; j <= i; ++j) restrict.emplace(sname(i, j), tsol.s(i, j));
  const RingPtr& tr = tsol.ring;
  auto res = [&](const RatFunc& f) { return f.substitute(restrict, tr); };

  if (n >= 2 && !res(sdot(n - 1, n)).is_zero())
    throw ModelError("derive_R: diagonal relation s_{n+1,n+1} + s_nn s_22 = 0 fails");

  VectorField vf;
  vf.n = n;
  vf.ring = tr;
  vf.coords = tsol.layout.coordinates();
  for (const auto& x : vf.coords) {
    if (x == "t1") {
      vf.comps.push_back(res(dt(0, 0)));
    } else if (x == tn) {
      vf.comps.push_back(res(dt(1, 0)));
    } else {
      auto [i, j] = tsol.layout.position(x);
      vf.comps.push_back(res(sdot(i, j)));
    }
  }
  vf.y = y.unaryExpr([&](const RatFunc& e) { return e.ring() ? res(e) : e; });
  for (int i = 1; i + 1 < n; ++i) vf.yukawa.push_back(vf.y(i, i + 1));

  // the dependent parameters must move with the field
  for (const auto& [k, g] : tsol.assignments) {
    auto [i, j] = tsol.layout.position("tc" + std::to_string(k));
    if (!(res(sdot(i, j)) == vf.apply(g)))
      throw ModelError("derive_R: field is not tangent along ť" + std::to_string(k));
  }
  if (tsol.root) {
    RatFunc r = RatFunc(MPoly::var(tr, tsol.root->var));
    RatFunc p(MPoly(tr, tsol.root->value));
    if (!(RatFunc(2) * r * vf[tr->name(tsol.root->var)] == vf.apply(p)))
      throw ModelError("derive_R: field is not tangent to the root relation");
  }
  return vf;
}

VectorField derive_R(int n) { return derive_R(n, solve_tcheck(n), gm_matrix(n)); }

const std::vector<RatFunc>& yukawa(const VectorField& vf) { return vf.yukawa; }

VectorField specialize(const VectorField& vf, const Rat& c) {
  const Ring& r = *vf.ring;
  std::vector<std::string> names;
  for (const auto& x : r.names())
    if (x != "c") names.push_back(x);
  auto bare = Ring::make(names);
  std::vector<Terms> factors;
  for (const auto& f : r.factors()) factors.push_back(MPoly(vf.ring, f).embed(bare).terms());
  const std::map<std::string, RatFunc> cval{{"c", RatFunc(c)}};
  std::vector<RootRelation> rels;
  for (const auto& rel : r.relations()) {
    RatFunc v = RatFunc(MPoly(vf.ring, rel.value)).substitute(cval, bare);
    if (!v.is_polynomial()) throw std::domain_error("specialize: relation is not polynomial");
    rels.push_back(RootRelation{bare->index(r.name(rel.var)), v.num().terms()});
  }
  RingPtr target = Ring::make(names, rels, factors);
  auto sub = [&](const RatFunc& f) { return f.ring() ? f.substitute(cval, target) : f; };

  VectorField out;
  out.n = vf.n;
  out.ring = target;
  out.coords = vf.coords;
  for (const auto& f : vf.comps) out.comps.push_back(sub(f));
  out.y = vf.y.unaryExpr(sub);
  for (const auto& f : vf.yukawa) out.yukawa.push_back(sub(f));
  return out;
}

TheoremReport check_theorem_constraints(const VectorField& vf, const TcheckSolution& tsol) {
  TheoremReport rep;
  const int size = vf.n + 1;
  const int n = vf.n;

  rep.shape = true;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const RatFunc& e = vf.y(i, j);
      bool ok;
      if (j != i + 1) ok = e.is_zero();
      else if (i == 0) ok = e == RatFunc(1);
      else if (i == n - 1) ok = e == RatFunc(-1);
      else ok = !e.is_zero();
      if (!ok) {
        rep.shape = false;
        rep.failures.push_back("Y entry (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ") has the wrong shape");
      }
    }

  RatMat ph = phi(n);
  SymMat p = ph.unaryExpr([](const Rat& x) { return RatFunc(x); });
  rep.symplectic = all_zero(SymMat(mul<RatFunc>(vf.y, p) + mul<RatFunc>(p, SymMat(vf.y.transpose()))));
  if (!rep.symplectic) rep.failures.push_back("Y Phi + Phi Y^T is not zero");

  rep.tangent = true;
  const std::map<std::string, RatFunc> none;
  // Y = (R(S) + S Atilde(R)) S^-1 along the derived field
  {
    ConnectionMatrix gm = gm_matrix(n);
    SymMat at = zeros<RatFunc>(size, size);
    const std::string tn = tname(n + 2);
    at += embed(gm["t1"], tsol.ring) * vf["t1"].substitute(none, tsol.ring);
    at += embed(gm[tn], tsol.ring) * vf[tn].substitute(none, tsol.ring);
    SymMat rs = tsol.s.unaryExpr([&](const RatFunc& e) { return e.ring() ? vf.apply(e) : RatFunc(0); });
    SymMat lhs = rs + mul<RatFunc>(tsol.s, at);
    SymMat rhs = mul<RatFunc>(vf.y, tsol.s);
    if (!all_zero(SymMat(lhs - rhs))) {
      rep.tangent = false;
      rep.failures.push_back("R(S) + S Atilde(R) differs from Y S");
    }
  }
  if (tsol.root) {
    const Ring& r = *tsol.ring;
    RatFunc x = RatFunc(MPoly::var(tsol.ring, tsol.root->var));
    RatFunc p(MPoly(tsol.ring, tsol.root->value));
    if (!(RatFunc(2) * x * vf[r.name(tsol.root->var)] == vf.apply(p))) {
      rep.tangent = false;
      rep.failures.push_back("field is not tangent to the root relation");
    }
  }
  return rep;
}

}  // namespace gmcd
