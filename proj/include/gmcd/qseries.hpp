#ifndef GMCD_QSERIES_HPP
#define GMCD_QSERIES_HPP

#include <limits>
#include <string>
#include <vector>

#include "gmcd/rat.hpp"

namespace gmcd {

// Truncated series in q with exponents in units of q^{1/24}. Coefficients
// live on the lattice offset + step*k; the series is known exactly for all
// exponents below prec (so O(q^{prec/24}) is the first unknown term).
class QSeries {
 public:
  static constexpr long kUnit = 24;

  QSeries() = default;  // zero, known to infinite precision
  static QSeries constant(const Rat& c, long prec_units);
  // sum_k coeffs[k] q^k with O(q^{order+1}).
  static QSeries integral(const std::vector<Rat>& coeffs, long order);
  // General lattice constructor.
  QSeries(long offset, long step, std::vector<Rat> coeffs, long prec);

  long offset() const { return offset_; }
  long step() const { return step_; }
  long prec() const { return prec_; }
  // Highest exponent (in units) at which the coefficient is known.
  long truncation() const { return prec_ - 1; }
  bool is_integral() const;  // every lattice point is a whole power of q

  Rat coeff_units(long e) const;  // throws past truncation
  Rat coeff(long k) const { return coeff_units(k * kUnit); }
  std::vector<Rat> coeffs(long kmax) const;  // q^0..q^kmax of an integral series
  // Exponent of the first nonzero coefficient; prec if none is known.
  long valuation() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rat& c, const QSeries& a);
  QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
  QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

  QSeries inverse() const;
  QSeries pow(long e) const;
  QSeries truncated(long prec_units) const;

  QSeries sign_flip() const;            // q -> -q
  QSeries scale(const Rat& lambda) const;  // q -> q / lambda
  QSeries subst_power(long m) const;    // q -> q^m
  QSeries q_derivative() const;         // q d/dq

  std::string str() const;

 private:
  void trim();
  long offset_ = 0;
  long step_ = kUnit;
  std::vector<Rat> c_;
  long prec_ = std::numeric_limits<long>::max() / 4;
};

}  // namespace gmcd

#endif  // GMCD_QSERIES_HPP
