#include "gmcd/gaussmanin.hpp"

#include <stdexcept>

#include "gmcd/picardfuchs.hpp"

namespace gmcd {

const SymMat& ConnectionMatrix::operator[](const std::string& coord) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == coord) return comps[i];
  throw std::out_of_range("ConnectionMatrix: no component d" + coord);
}

std::vector<std::pair<std::string, RatFunc>> ConnectionMatrix::entry(int i, int j) const {
  std::vector<std::pair<std::string, RatFunc>> out;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!comps[k](i, j).is_zero()) out.emplace_back(coords[k], comps[k](i, j));
  return out;
}

SymMat ConnectionMatrix::contract(const std::vector<RatFunc>& field) const {
  if (field.size() != comps.size()) throw std::invalid_argument("contract: size mismatch");
  SymMat out = zeros<RatFunc>(size(), size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (field[k].is_zero()) continue;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (!comps[k](i, j).is_zero()) out(i, j) += field[k] * comps[k](i, j);
  }
  return out;
}

SymMat embed(const SymMat& m, const RingPtr& target) {
  SymMat out(m.rows(), m.cols());
  const std::map<int, RatFunc> none;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute(none, target);
  return out;
}

SymMat base_change(int n) {
  auto tr = t_ring(n);
  RatFunc t1 = RatFunc::var(tr, "t1"), tn = RatFunc::var(tr, tname(n + 2));
  RatFunc fac = RatFunc(Rat(-1, n + 2)) * t1.pow(n + 3) / tn;
  SymMat b = zeros<RatFunc>(n + 1, n + 1);
  b(0, 0) = t1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) {
      // d/dt1 (b_i omega_{i+1}) = b_i' omega_{i+1} + b_i omega_{i+2}
      b(k, i) += fac * b(k - 1, i).derivative(0);
      b(k, i + 1) += fac * b(k - 1, i);
    }
  return b;
}

ConnectionMatrix gm_matrix(int n) {
  auto tr = t_ring(n);
  RatFunc t1 = RatFunc::var(tr, "t1"), tn = RatFunc::var(tr, tname(n + 2));
  RatFunc z = tn * t1.pow(-(n + 2));
  SymMat comp = companion_matrix(n);
  SymMat az(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      az(i, j) = comp(i, j).substitute(std::map<int, RatFunc>{{0, z}}, tr);
  SymMat b = base_change(n);
  SymMat binv = inverse<RatFunc>(b);
  ConnectionMatrix gm;
  for (int v : {0, 1}) {
    SymMat db = b.unaryExpr([v](const RatFunc& x) { return x.derivative(v); });
    RatFunc dz = z.derivative(v);
    SymMat azb = mul<RatFunc>(az, b);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) azb(i, j) = azb(i, j) * dz - db(i, j);
    gm.coords.push_back(tr->name(v));
    gm.comps.push_back(mul<RatFunc>(binv, azb));
  }
  return gm;
}

ConnectionMatrix enhanced_connection(const SymMat& s, const ConnectionMatrix& gm,
                                     const std::vector<std::string>& coords) {
  if (s.rows() != gm.size() || s.cols() != gm.size())
    throw std::invalid_argument("enhanced_connection: size mismatch");
  RingPtr ring;
  for (int i = 0; i < s.rows() && !ring; ++i)
    for (int j = 0; j < s.cols() && !ring; ++j) ring = s(i, j).ring();
  if (!ring) throw std::invalid_argument("enhanced_connection: S has no variables");
  SymMat sinv = inverse<RatFunc>(s);
  ConnectionMatrix out;
  for (const auto& x : coords) {
    int v = ring->index(x);
    SymMat m = s.unaryExpr([v](const RatFunc& e) { return e.derivative(v); });
    for (std::size_t k = 0; k < gm.coords.size(); ++k)
      if (gm.coords[k] == x) m += mul<RatFunc>(s, embed(gm.comps[k], ring));
    out.coords.push_back(x);
    out.comps.push_back(mul<RatFunc>(m, sinv));
  }
  return out;
}

SymMat curvature(const ConnectionMatrix& m, const std::string& x, const std::string& y) {
  const SymMat& mx = m[x];
  const SymMat& my = m[y];
  RingPtr ring;
  for (int i = 0; i < mx.rows() && !ring; ++i)
    for (int j = 0; j < mx.cols() && !ring; ++j) ring = mx(i, j).ring() ? mx(i, j).ring() : my(i, j).ring();
  int vx = ring->index(x), vy = ring->index(y);
  SymMat out = my.unaryExpr([vx](const RatFunc& e) { return e.derivative(vx); }) -
               mx.unaryExpr([vy](const RatFunc& e) { return e.derivative(vy); });
  return out + mul<RatFunc>(my, mx) - mul<RatFunc>(mx, my);
}

}  // namespace gmcd
