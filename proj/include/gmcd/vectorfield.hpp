#ifndef GMCD_VECTORFIELD_HPP
#define GMCD_VECTORFIELD_HPP

#include <string>
#include <vector>

#include "gmcd/gaussmanin.hpp"
#include "gmcd/moduli.hpp"

namespace gmcd {

// Vector field on the enhanced moduli space together with the matrix Y of
// the covariant derivative along it.
struct VectorField {
  int n = 0;
  RingPtr ring;
  std::vector<std::string> coords;  // t1 < t2 < ...
  std::vector<RatFunc> comps;
  SymMat y;
  std::vector<RatFunc> yukawa;  // Y_1 .. Y_{n-2}

  const RatFunc& operator[](const std::string& coord) const;
  // Derivation of f along the field (partials over the coordinate names).
  RatFunc apply(const RatFunc& f) const;
};

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves Sdot = Y S - S Atilde(R) on the space of free lower-triangular S,
// then restricts to the solved parameters. Throws ModelError when the
// restriction is not consistent (relation on the diagonal or tangency).
VectorField derive_R(int n, const TcheckSolution& tsol, const ConnectionMatrix& gm);
VectorField derive_R(int n);

const std::vector<RatFunc>& yukawa(const VectorField& vf);

// Substitutes a value for c in every component.
VectorField specialize(const VectorField& vf, const Rat& c);

struct TheoremReport {
  bool shape = false;     // Y band structure
  bool symplectic = false;  // Y Phi + Phi Y^T = 0
  bool tangent = false;   // dependent parameters and root relation
  std::vector<std::string> failures;
  bool ok() const { return shape && symplectic && tangent; }
};

TheoremReport check_theorem_constraints(const VectorField& vf, const TcheckSolution& tsol);

}  // namespace gmcd

#endif  // GMCD_VECTORFIELD_HPP
