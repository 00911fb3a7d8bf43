#include "gmcd/matrix.hpp"

namespace gmcd {

Nullspace nullspace(const RatMat& a0) {
  RatMat a = a0;
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(r));
    Rat inv = a(r, c).inverse();
    for (int j = 0; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rat f = a(i, c);
      for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivcol.push_back(c);
    ++r;
  }
  Nullspace ns;
  ns.rank = r;
  std::vector<bool> is_piv(cols, false);
  for (int c : pivcol) is_piv[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    RatVec v(cols);
    for (int j = 0; j < cols; ++j) v(j) = Rat(0);
    v(f) = Rat(1);
    for (int i = 0; i < r; ++i) v(pivcol[i]) = -a(i, f);
    ns.basis.push_back(v);
  }
  return ns;
}

}  // namespace gmcd
