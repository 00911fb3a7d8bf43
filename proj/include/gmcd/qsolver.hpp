#ifndef GMCD_QSOLVER_HPP
#define GMCD_QSOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "gmcd/qseries.hpp"
#include "gmcd/vectorfield.hpp"

namespace gmcd {

struct SolverConfig {
  int n = 1;
  Rat c;
  std::optional<Rat> k0;  // square root of -c (n = 2) or of c (n = 4)
  Rat t10;
  std::optional<Rat> t20;
  std::string free_coord;  // first-order coefficient fixed by hand
  Rat free_value;
  int order = 100;

  static SolverConfig defaults(int n);
};

// Solution t_j = sum_k t_{j,k} q^k of a q d/dq t = R(t).
struct SeriesSolution {
  int n = 0;
  Rat a;
  std::vector<std::string> coords;
  std::vector<QSeries> series;  // integral, known through q^order
  int order = 0;

  const QSeries& operator[](const std::string& coord) const;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Modular vector field with c specialized to cfg.c.
VectorField specialized_field(const SolverConfig& cfg);

// Singular point of R; throws SolverError unless every component vanishes.
std::vector<Rat> seed_p0(const VectorField& vf, const SolverConfig& cfg);

struct FirstOrder {
  Rat a;
  std::vector<Rat> p1;
};
FirstOrder first_order(const VectorField& vf, const std::vector<Rat>& p0, const SolverConfig& cfg);

// Jacobian of the components at p.
RatMat jacobian(const VectorField& vf, const std::vector<Rat>& p);

// Order-by-order solve of (a k I - J(p0)) p_k = [q^k] R(t_{<k}).
SeriesSolution recurse(const VectorField& vf, const SolverConfig& cfg);
SeriesSolution solve_series(const SolverConfig& cfg);

// Rational function of the coordinates evaluated on series.
QSeries evaluate_series(const RatFunc& f, const std::vector<std::string>& coords,
                        const std::vector<QSeries>& values);

struct SeriesCheck {
  bool ok = true;
  int first_failure = -1;  // order of the first nonzero coefficient
  std::string detail;
};

// a q d/dq t_j - R_j(t) vanishes through the solution order.
SeriesCheck check_residual(const SeriesSolution& sol, const VectorField& vf);
// Root relation r^2 = p(t) along the solution.
SeriesCheck check_relation(const SeriesSolution& sol, const VectorField& vf);

struct TableColumn {
  std::string label;
  std::vector<Rat> values;
};

// Columns with the standard normalizations:
// n = 2 reads t(q/10) and n = 4 rescales every coordinate.
std::vector<TableColumn> coefficient_table(const SeriesSolution& sol, int kmax);

// Integer coefficients from q^1 on in every normalized column.
SeriesCheck check_integrality(const SeriesSolution& sol);

// (1/6) Y_1^2 for n = 4 and Y_1 for n = 3, as series.
QSeries yukawa_series(const SeriesSolution& sol, const VectorField& vf);

}  // namespace gmcd

#endif  // GMCD_QSOLVER_HPP
