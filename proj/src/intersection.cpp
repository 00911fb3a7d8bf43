#include "gmcd/intersection.hpp"

#include "gmcd/picardfuchs.hpp"

namespace gmcd {

SymMat omega_matrix(int n, const std::optional<Rat>& c) {
  auto tr = t_ring(n);
  const int size = n + 1;
  RatFunc d(MPoly(tr, tr->factors()[0]));
  RatFunc cval = c ? RatFunc(MPoly(tr, *c)) : RatFunc::var(tr, "c");
  std::vector<RatFunc> p = pf_t1_reduction(n);

  SymMat om = zeros<RatFunc>(size, size);
  om(0, n) = RatFunc(Rat(-(n + 2)).pow(n)) * cval / d;
  for (int i = 0; i + 1 < size; ++i) {
    // <omega_i, omega_{n+2}> through the Picard-Fuchs relation
    RatFunc last(0);
    for (int k = 0; k < size; ++k)
      if (!om(i, k).is_zero()) last += p[k] * om(i, k);
    for (int j = 0; j < size; ++j) {
      const RatFunc& next = j + 1 < size ? om(i, j + 1) : last;
      om(i + 1, j) = om(i, j).derivative(0) - next;
    }
  }
  return om;
}

CompatibilityReport check_compatibility(const SymMat& omega, const ConnectionMatrix& gm) {
  CompatibilityReport rep;
  rep.ok = true;
  RingPtr ring;
  for (int i = 0; i < omega.rows() && !ring; ++i)
    for (int j = 0; j < omega.cols() && !ring; ++j) ring = omega(i, j).ring();
  for (std::size_t k = 0; k < gm.coords.size(); ++k) {
    int v = ring->index(gm.coords[k]);
    const SymMat& a = gm.comps[k];
    SymMat r = omega.unaryExpr([v](const RatFunc& e) { return e.derivative(v); }) -
               mul<RatFunc>(a, omega) - mul<RatFunc>(omega, SymMat(a.transpose()));
    rep.ok = rep.ok && all_zero(r);
    rep.coords.push_back(gm.coords[k]);
    rep.residual.push_back(std::move(r));
  }
  return rep;
}

}  // namespace gmcd
