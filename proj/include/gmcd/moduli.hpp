#ifndef GMCD_MODULI_HPP
#define GMCD_MODULI_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gmcd/matrix.hpp"

namespace gmcd {

// Constant intersection matrix: block form [[0, J], [-J, 0]] for odd n and
// the antidiagonal J_{n+1} for even n.
RatMat phi(int n);

// Dimension of the enhanced moduli space.
int dim_T(int n);

struct LayoutCell {
  enum class Kind { One, Coord, Dependent };
  Kind kind = Kind::One;
  int index = 0;  // k of t_k or of the dependent parameter

  std::string name() const;     // "1", "t5", "ť3"
  std::string var_name() const;  // ASCII variable name: "t5", "tc3"
};

// Lower-triangular placement of coordinates in the period matrix S.
struct SLayout {
  int n = 0;
  std::vector<std::vector<LayoutCell>> rows;  // rows[i] has i + 1 cells
  // dependent parameter promoted to a coordinate: (index of ť, index of t)
  std::optional<std::pair<int, int>> promoted;

  // t1 < t2 < ... including t1, t_{n+2} and the promoted root.
  std::vector<std::string> coordinates() const;
  std::vector<int> dependents() const;  // ť indices, including a promoted one
  std::pair<int, int> position(const std::string& var) const;  // throws if absent
};

// Supported for 1 <= n <= 4.
SLayout s_layout(int n);

struct TcheckSolution {
  SLayout layout;
  RingPtr ring;  // coordinates, c; root relation and t1^{n+2} - t_{n+2}
  // ť_k = value, in solve order; the promoted parameter is not listed
  std::vector<std::pair<int, RatFunc>> assignments;
  std::optional<RootRelation> root;
  SymMat s;      // period matrix in ring
  SymMat omega;  // intersection matrix in ring

  const RatFunc& value(int k) const;  // throws for unknown or promoted k
};

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves S Omega S^T = Phi for the dependent parameters. omega lives over
// t_ring(n), with c symbolic or specialized.
TcheckSolution solve_tcheck(int n, const SymMat& omega);
TcheckSolution solve_tcheck(int n);

// S Omega S^T - Phi.
SymMat period_residual(const SymMat& s, const SymMat& omega);

}  // namespace gmcd

#endif  // GMCD_MODULI_HPP
