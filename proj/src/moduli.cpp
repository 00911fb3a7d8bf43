#include "gmcd/moduli.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmcd/gaussmanin.hpp"
#include "gmcd/intersection.hpp"
#include "gmcd/picardfuchs.hpp"

namespace gmcd {

RatMat phi(int n) {
  if (n < 1) throw std::invalid_argument("phi: n must be positive");
  const int size = n + 1;
  RatMat m = zeros<Rat>(size, size);
  if (n % 2 == 0) {
    for (int i = 0; i < size; ++i) m(i, size - 1 - i) = Rat(1);
  } else {
    const int h = size / 2;
    for (int i = 0; i < h; ++i) {
      m(i, size - 1 - i) = Rat(1);
      m(h + i, h - 1 - i) = Rat(-1);
    }
  }
  return m;
}

int dim_T(int n) {
  if (n < 1) throw std::invalid_argument("dim_T: n must be positive");
  return n % 2 == 1 ? (n + 1) * (n + 3) / 4 + 1 : n * (n + 2) / 4 + 1;
}

std::string LayoutCell::name() const {
  switch (kind) {
    case Kind::One: return "1";
    case Kind::Coord: return tname(index);
    case Kind::Dependent: return "ť" + std::to_string(index);
  }
  return {};
}

std::string LayoutCell::var_name() const {
  switch (kind) {
    case Kind::One: return "1";
    case Kind::Coord: return tname(index);
    case Kind::Dependent: return "tc" + std::to_string(index);
  }
  return {};
}

std::vector<std::string> SLayout::coordinates() const {
  std::vector<int> idx{1, n + 2};
  for (const auto& row : rows)
    for (const auto& c : row)
      if (c.kind == LayoutCell::Kind::Coord) idx.push_back(c.index);
  if (promoted) idx.push_back(promoted->second);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<std::string> out;
  for (int k : idx) out.push_back(tname(k));
  return out;
}

std::vector<int> SLayout::dependents() const {
  std::vector<int> out;
  for (const auto& row : rows)
    for (const auto& c : row)
      if (c.kind == LayoutCell::Kind::Dependent) out.push_back(c.index);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> SLayout::position(const std::string& var) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const auto& c = rows[i][j];
      if (c.var_name() == var) return {static_cast<int>(i), static_cast<int>(j)};
      if (promoted && c.kind == LayoutCell::Kind::Dependent && c.index == promoted->first &&
          var == tname(promoted->second))
        return {static_cast<int>(i), static_cast<int>(j)};
    }
  throw std::out_of_range("SLayout: " + var + " is not placed in S");
}

SLayout s_layout(int n) {
  using K = LayoutCell::Kind;
  auto one = LayoutCell{K::One, 0};
  auto t = [](int k) { return LayoutCell{K::Coord, k}; };
  auto d = [](int k) { return LayoutCell{K::Dependent, k}; };
  SLayout l;
  l.n = n;
  switch (n) {
    case 1:
      l.rows = {{one}, {t(2), d(1)}};
      break;
    case 2:
      l.rows = {{one}, {t(2), d(2)}, {d(4), d(3), d(1)}};
      l.promoted = std::make_pair(2, 3);
      break;
    case 3:
      l.rows = {{one}, {t(2), t(3)}, {t(4), t(6), d(2)}, {t(7), d(4), d(3), d(1)}};
      break;
    case 4:
      l.rows = {{one},
                {t(2), t(3)},
                {t(4), t(5), d(3)},
                {t(7), d(7), d(5), d(2)},
                {d(9), d(8), d(6), d(4), d(1)}};
      l.promoted = std::make_pair(3, 8);
      break;
    default:
      throw std::invalid_argument("s_layout: no parameter placement for n = " +
                                  std::to_string(n));
  }
  return l;
}

const RatFunc& TcheckSolution::value(int k) const {
  for (const auto& [idx, v] : assignments)
    if (idx == k) return v;
  throw std::out_of_range("TcheckSolution: no value for ť" + std::to_string(k));
}

SymMat period_residual(const SymMat& s, const SymMat& omega) {
  const int size = static_cast<int>(s.rows());
  RatMat ph = phi(size - 1);
  SymMat r = mul<RatFunc>(mul<RatFunc>(s, omega), SymMat(s.transpose()));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (!ph(i, j).is_zero()) r(i, j) -= RatFunc(ph(i, j));
  return r;
}

namespace {

MPoly cleared(const MPoly& p) { return p.mul_monomial(p.laurent_shift()); }

SymMat move(const SymMat& m, const RingPtr& target) { return embed(m, target); }

}  // namespace

TcheckSolution solve_tcheck(int n, const SymMat& omega) {
  SLayout layout = s_layout(n);
  const int size = n + 1;
  std::vector<std::string> coords = layout.coordinates();

  std::vector<std::string> names = coords;
  names.push_back("c");
  std::vector<int> unknown_idx;
  for (int k : layout.dependents())
    if (!layout.promoted || layout.promoted->first != k) {
      names.push_back("tc" + std::to_string(k));
      unknown_idx.push_back(k);
    }
  auto bare = Ring::make(names);
  MPoly dpoly = MPoly::var(bare, "t1").pow(n + 2) - MPoly::var(bare, tname(n + 2));
  RingPtr ring = Ring::make(names, {}, {dpoly.terms()});

  std::optional<int> root_var;
  if (layout.promoted) root_var = ring->index(tname(layout.promoted->second));

  auto cell_value = [&](const LayoutCell& c, const RingPtr& r) -> RatFunc {
    if (c.kind == LayoutCell::Kind::One) return RatFunc(MPoly(r, Rat(1)));
    if (c.kind == LayoutCell::Kind::Dependent && layout.promoted &&
        layout.promoted->first == c.index)
      return RatFunc::var(r, tname(layout.promoted->second));
    return RatFunc::var(r, c.var_name());
  };

  SymMat s = zeros<RatFunc>(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j <= i; ++j) s(i, j) = cell_value(layout.rows[i][j], ring);
  SymMat om = move(omega, ring);
  SymMat psi = period_residual(s, om);

  std::vector<std::pair<int, RatFunc>> solved;
  std::optional<RootRelation> root;
  std::vector<int> open = unknown_idx;

  auto substitute_all = [&](const std::map<std::string, RatFunc>& vals, const RingPtr& target) {
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) psi(i, j) = psi(i, j).substitute(vals, target);
    for (auto& [k, v] : solved) v = v.substitute(vals, target);
  };

  while (!open.empty() || (root_var && !root)) {
    bool progress = false;
    for (int i = 0; i < size && !progress; ++i)
      for (int j = i; j < size && !progress; ++j) {
        if (psi(i, j).is_zero()) continue;
        MPoly eq = cleared(psi(i, j).num());
        std::vector<int> present;
        for (int k : open)
          if (eq.contains(ring->index("tc" + std::to_string(k)))) present.push_back(k);
        if (present.size() != 1) continue;
        int u = ring->index("tc" + std::to_string(present[0]));
        if (eq.degree_in(u) != 1) continue;
        RatFunc value;
        try {
          value = -RatFunc(eq.coefficient_in(u, 0)) / RatFunc(eq.coefficient_in(u, 1));
        } catch (const UndeclaredFactor&) {
          continue;
        }
        substitute_all({{ring->name(u), value}}, ring);
        solved.emplace_back(present[0], value);
        open.erase(std::find(open.begin(), open.end(), present[0]));
        progress = true;
      }
    if (progress) continue;

    if (root_var && !root) {
      for (int i = 0; i < size && !progress; ++i)
        for (int j = i; j < size && !progress; ++j) {
          if (psi(i, j).is_zero()) continue;
          MPoly eq = cleared(psi(i, j).num());
          bool other = false;
          for (int k : open) other = other || eq.contains(ring->index("tc" + std::to_string(k)));
          if (other || eq.degree_in(*root_var) != 2 ||
              !eq.coefficient_in(*root_var, 1).is_zero())
            continue;
          RatFunc sq = -RatFunc(eq.coefficient_in(*root_var, 0)) /
                       RatFunc(eq.coefficient_in(*root_var, 2));
          if (!sq.is_polynomial() || sq.num().contains(*root_var)) continue;
          root = RootRelation{*root_var, sq.num().terms()};
          RingPtr next = Ring::make(names, {*root}, {dpoly.terms()});
          substitute_all({}, next);
          ring = next;
          progress = true;
        }
    }
    if (!progress)
      throw InconsistentSystem("solve_tcheck: no triangular step left for n = " +
                               std::to_string(n));
  }
  if (!all_zero(psi))
    throw InconsistentSystem("solve_tcheck: residual does not vanish for n = " +
                             std::to_string(n));

  // final ring: coordinates and c only
  std::vector<std::string> tnames = coords;
  tnames.push_back("c");
  auto tbare = Ring::make(tnames);
  MPoly tdpoly = MPoly::var(tbare, "t1").pow(n + 2) - MPoly::var(tbare, tname(n + 2));
  TcheckSolution sol;
  sol.layout = layout;
  if (root) {
    int var = tbare->index(ring->name(root->var));
    MPoly val = MPoly(ring, root->value).embed(tbare);
    sol.root = RootRelation{var, val.terms()};
    sol.ring = Ring::make(tnames, {*sol.root}, {tdpoly.terms()});
  } else {
    sol.ring = Ring::make(tnames, {}, {tdpoly.terms()});
  }
  const std::map<std::string, RatFunc> none;
  for (const auto& [k, v] : solved) sol.assignments.emplace_back(k, v.substitute(none, sol.ring));

  sol.s = zeros<RatFunc>(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto& c = layout.rows[i][j];
      bool free = c.kind != LayoutCell::Kind::Dependent ||
                  (layout.promoted && layout.promoted->first == c.index);
      sol.s(i, j) = free ? cell_value(c, sol.ring) : sol.value(c.index);
    }
  sol.omega = move(omega, sol.ring);
  if (!all_zero(period_residual(sol.s, sol.omega)))
    throw InconsistentSystem("solve_tcheck: verification failed for n = " + std::to_string(n));
  return sol;
}

TcheckSolution solve_tcheck(int n) { return solve_tcheck(n, omega_matrix(n)); }

}  // namespace gmcd
