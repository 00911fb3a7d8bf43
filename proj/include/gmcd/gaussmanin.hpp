#ifndef GMCD_GAUSSMANIN_HPP
#define GMCD_GAUSSMANIN_HPP

#include <string>
#include <vector>

#include "gmcd/matrix.hpp"

namespace gmcd {

// Matrix-valued 1-form sum_x M_x dx over the coordinates listed in coords.
struct ConnectionMatrix {
  std::vector<std::string> coords;
  std::vector<SymMat> comps;

  int size() const { return comps.empty() ? 0 : static_cast<int>(comps.front().rows()); }
  const SymMat& operator[](const std::string& coord) const;
  // Entry (i, j) as a list of (coordinate, coefficient) with zero parts dropped.
  std::vector<std::pair<std::string, RatFunc>> entry(int i, int j) const;
  // Contraction with a vector field given per coordinate.
  SymMat contract(const std::vector<RatFunc>& field) const;
};

// Rows express d^k eta / dz^k in omega_1..omega_{k+1}, eta = t1 omega_1.
SymMat base_change(int n);

// Gauss-Manin connection in the omega basis over t_ring(n):
// nabla omega = A omega with A = B^-1 (A(z) dz B - dB), B = base_change(n).
ConnectionMatrix gm_matrix(int n);

// A = (dS + S Atilde) S^-1 with d taken along every coordinate in coords.
// Atilde components are embedded by variable name into the ring of S.
ConnectionMatrix enhanced_connection(const SymMat& s, const ConnectionMatrix& gm,
                                     const std::vector<std::string>& coords);

// d_x M_y - d_y M_x + M_y M_x - M_x M_y: vanishes for a flat connection.
SymMat curvature(const ConnectionMatrix& m, const std::string& x, const std::string& y);

// Copy of a symbolic matrix moved into another ring by variable name.
SymMat embed(const SymMat& m, const RingPtr& target);

}  // namespace gmcd

#endif  // GMCD_GAUSSMANIN_HPP
