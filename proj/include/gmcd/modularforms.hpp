#ifndef GMCD_MODULARFORMS_HPP
#define GMCD_MODULARFORMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmcd/qsolver.hpp"

namespace gmcd {

// E_2(q) = 1 - 24 sum sigma(k) q^k through q^N.
QSeries eisenstein_E2(int N);

// prod_j eta(q^{t_j})^{r_j} with eta(q) = q^{1/24} prod (1 - q^k).
struct EtaQuotient {
  std::vector<std::pair<int, int>> factors;  // (t_j, r_j)
  long leading_units() const;                // sum r_j t_j, in q^{1/24}
};
// Known through q^N beyond the leading power.
QSeries eta_quotient(const EtaQuotient& e, int N);

// theta_3(sign * q^scale) with theta_3(q) = 1 + 2 sum q^{k^2/2}, through q^N.
QSeries theta3(int scale, int sign, int N);
// theta_2(sign * q^scale) with theta_2(q) = sum_m q^{(m + 1/2)^2 / 2}.
QSeries theta2(int scale, int sign, int N);

// Integer solutions of r x^2 + s y^2 = k for k = 0..kmax.
std::vector<long> count_representations(long r, long s, long kmax);

std::vector<long> sigma(long kmax);       // sigma(0) = 0
std::vector<long> sigma_odd(long kmax);   // sum of odd divisors
std::vector<long> sigma_even(long kmax);  // sum of even divisors

struct CheckReport {
  std::string check;
  std::string range;
  bool pass = true;
  std::optional<long> first_failure;
  std::string detail;
};

// Coefficients of theta_3(q^{2r}) theta_3(q^{2s}) against brute-force counts.
CheckReport check_theta_products(long r, long s, long kmax);
// x^2 + 3y^2 = k has 3 t_{1,k} solutions when 4 | k and t_{1,k} otherwise.
CheckReport check_prop81(const QSeries& t1, long kmax);
// sum sigma_odd(k) q^k = (10/6) t1(q/10), sigma_odd(0) := 1/24; t1 from n = 2.
CheckReport check_odd_divisors(const QSeries& t1, long kmax);
// sum (sigma_odd(2k) - sigma_even(2k)) q^k = (10/4) t2(q/10), 1/8 at k = 0.
CheckReport check_divisor_difference(const QSeries& t2, long kmax);
// 3 | mu_{3k} for eta^8(q) eta^8(q^2) = sum mu_k q^k, and 3 | a_k (k >= 1)
// for (1/8)(E_2(q) - 9 E_2(q^3)) = sum a_k q^k.
std::vector<CheckReport> hahn_divisibility(long N);

// Closed forms of the n = 1 and n = 2 solutions against the solver output.
std::vector<CheckReport> identity_suite_n1(const SeriesSolution& sol);
std::vector<CheckReport> identity_suite_n2(const SeriesSolution& sol);

}  // namespace gmcd

#endif  // GMCD_MODULARFORMS_HPP
