#ifndef GMCD_INTERSECTION_HPP
#define GMCD_INTERSECTION_HPP

#include <optional>
#include <vector>

#include "gmcd/gaussmanin.hpp"

namespace gmcd {

// Intersection matrix (<omega_i, omega_j>) over t_ring(n). The constant c is
// kept symbolic unless a value is given.
SymMat omega_matrix(int n, const std::optional<Rat>& c = std::nullopt);

struct CompatibilityReport {
  std::vector<std::string> coords;
  std::vector<SymMat> residual;  // d_x Omega - A_x Omega - Omega A_x^T
  bool ok = false;
};

CompatibilityReport check_compatibility(const SymMat& omega, const ConnectionMatrix& gm);

}  // namespace gmcd

#endif  // GMCD_INTERSECTION_HPP
