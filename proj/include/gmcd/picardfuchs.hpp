#ifndef GMCD_PICARDFUCHS_HPP
#define GMCD_PICARDFUCHS_HPP

#include <string>
#include <vector>

#include "gmcd/matrix.hpp"

namespace gmcd {

mpz_class stirling2(int r, int s);
mpz_class stirling1(int r, int s);  // signed, s(r,s)

// {z} with the declared factor z - 1.
RingPtr z_ring();
// {t1, t<n+2>, c} with the declared factor t1^(n+2) - t<n+2>.
RingPtr t_ring(int n);
std::string tname(int k);  // "t<k>"

// Linear differential operator sum_i c[i] (d/dx)^i, x = ring variable var.
struct DOperator {
  RingPtr ring;
  int var = 0;
  std::vector<RatFunc> c;

  int order() const { return static_cast<int>(c.size()) - 1; }
  std::string str(const std::string& dsym = "D") const;
  friend bool operator==(const DOperator& a, const DOperator& b);
};

DOperator d_multiplication(const RingPtr& ring, int var, const RatFunc& f);
DOperator d_derivation(const RingPtr& ring, int var);
DOperator operator+(const DOperator& a, const DOperator& b);
DOperator operator*(const DOperator& a, const DOperator& b);  // composition
DOperator monic(const DOperator& op);

// sum_i c[i] theta^i with theta = z d/dz and coefficients in z_ring().
struct ThetaOperator {
  std::vector<RatFunc> c;
  std::string str() const;
  friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) { return a.c == b.c; }
};

ThetaOperator pf_theta(int n);
std::string pf_theta_factored(int n);
DOperator theta_to_d(const ThetaOperator& op);
ThetaOperator d_to_theta(const DOperator& op);

// -c[n]/c[n+1] of the theta form: the subleading ratio of the monic theta operator.
RatFunc theta_subleading(int n);

// (n+1)x(n+1) companion matrix in z_ring(): shift rows, last row b_1..b_{n+1}.
SymMat companion_matrix(int n);

// Picard-Fuchs operator in d/dt1 over t_ring(n), monic, computed by pulling
// back the z-operator along z = t<n+2>/t1^(n+2) applied to t1*omega_1.
DOperator pf_t1(int n);
// P_0..P_n with omega_{n+2} = sum_k P_k omega_{k+1}.
std::vector<RatFunc> pf_t1_reduction(int n);
// -S2(n+2,k+1) t1^(k+1) / (t1^(n+2) - t<n+2>).
std::vector<RatFunc> pf_t1_closed_form(int n);

}  // namespace gmcd

#endif  // GMCD_PICARDFUCHS_HPP
