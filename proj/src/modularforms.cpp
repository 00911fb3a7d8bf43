#include "gmcd/modularforms.hpp"

#include <cmath>
#include <gmpxx.h>
#include <stdexcept>

namespace gmcd {

namespace {

std::string range_str(long lo, long hi) {
  return std::to_string(lo) + "<=k<=" + std::to_string(hi);
}

long isqrt(long x) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

CheckReport compare(const std::string& name, const std::vector<Rat>& got,
                    const std::vector<Rat>& want, long lo = 0) {
  CheckReport rep{name, range_str(lo, lo + static_cast<long>(want.size()) - 1), true, {}, {}};
  for (std::size_t k = 0; k < want.size(); ++k)
    if (!(got.at(k) == want[k])) {
      rep.pass = false;
      rep.first_failure = lo + static_cast<long>(k);
      rep.detail = "got " + got[k].str() + ", expected " + want[k].str();
      break;
    }
  return rep;
}

std::vector<Rat> head(const QSeries& s, long kmax) {
  std::vector<Rat> out;
  for (long k = 0; k <= kmax; ++k) out.push_back(s.coeff(k));
  return out;
}

}  // namespace

QSeries eisenstein_E2(int N) {
  std::vector<long> s = sigma(N);
  std::vector<Rat> c(N + 1);
  c[0] = Rat(1);
  for (int k = 1; k <= N; ++k) c[k] = Rat(-24 * s[k]);
  return QSeries::integral(c, N);
}

long EtaQuotient::leading_units() const {
  long u = 0;
  for (auto [t, r] : factors) u += static_cast<long>(t) * r;
  return u;
}

QSeries eta_quotient(const EtaQuotient& e, int N) {
  std::vector<mpz_class> c(N + 1);
  c[0] = 1;
  for (auto [t, r] : e.factors) {
    if (t <= 0) throw std::invalid_argument("eta_quotient: argument multiplier must be positive");
    for (int rep = 0; rep < std::abs(r); ++rep)
      for (int m = t; m <= N; m += t) {
        if (r > 0) {
          for (int i = N; i >= m; --i) c[i] -= c[i - m];  // times (1 - q^m)
        } else {
          for (int i = m; i <= N; ++i) c[i] += c[i - m];  // over (1 - q^m)
        }
      }
  }
  std::vector<Rat> rc;
  rc.reserve(c.size());
  for (const auto& x : c) rc.emplace_back(x);
  long off = e.leading_units();
  return QSeries(off, QSeries::kUnit, std::move(rc), off + (N + 1) * QSeries::kUnit);
}

QSeries theta3(int scale, int sign, int N) {
  if (scale <= 0) throw std::invalid_argument("theta3: scale must be positive");
  const long step = 12L * scale;
  const long prec = (N + 1) * QSeries::kUnit;
  std::vector<Rat> c((prec + step - 1) / step);
  c[0] = Rat(1);
  for (long k = 1; k * k < static_cast<long>(c.size()); ++k) c[k * k] = Rat(2);
  QSeries s(0, step, std::move(c), prec);
  return sign < 0 ? s.sign_flip() : s;
}

QSeries theta2(int scale, int sign, int N) {
  if (scale <= 0) throw std::invalid_argument("theta2: scale must be positive");
  // exponents 3 scale (2m+1)^2 = 3 scale + 24 scale * m(m+1)/2 in q^{1/24}
  const long off = 3L * scale, step = 24L * scale;
  const long prec = (N + 1) * QSeries::kUnit;
  std::vector<Rat> c(prec > off ? (prec - off + step - 1) / step : 0);
  for (long m = 0; m * (m + 1) / 2 < static_cast<long>(c.size()); ++m) c[m * (m + 1) / 2] = Rat(2);
  QSeries s(off, step, std::move(c), prec);
  return sign < 0 ? s.sign_flip() : s;
}

std::vector<long> count_representations(long r, long s, long kmax) {
  if (r <= 0 || s <= 0) throw std::invalid_argument("count_representations: r, s must be positive");
  std::vector<long> out(kmax + 1, 0);
  const long xmax = isqrt(kmax / r);
  for (long x = -xmax; x <= xmax; ++x) {
    long rest = kmax - r * x * x;
    long ymax = isqrt(rest / s);
    for (long y = -ymax; y <= ymax; ++y) ++out[r * x * x + s * y * y];
  }
  return out;
}

std::vector<long> sigma(long kmax) {
  std::vector<long> s(kmax + 1, 0);
  for (long d = 1; d <= kmax; ++d)
    for (long m = d; m <= kmax; m += d) s[m] += d;
  return s;
}

std::vector<long> sigma_odd(long kmax) {
  std::vector<long> s(kmax + 1, 0);
  for (long d = 1; d <= kmax; d += 2)
    for (long m = d; m <= kmax; m += d) s[m] += d;
  return s;
}

std::vector<long> sigma_even(long kmax) {
  std::vector<long> s(kmax + 1, 0);
  for (long d = 2; d <= kmax; d += 2)
    for (long m = d; m <= kmax; m += d) s[m] += d;
  return s;
}

CheckReport check_theta_products(long r, long s, long kmax) {
  QSeries th = theta3(static_cast<int>(2 * r), 1, kmax) * theta3(static_cast<int>(2 * s), 1, kmax);
  std::vector<long> cnt = count_representations(r, s, kmax);
  std::vector<Rat> want;
  for (long v : cnt) want.emplace_back(Rat(v));
  return compare("theta_products r=" + std::to_string(r) + " s=" + std::to_string(s), head(th, kmax), want);
}

CheckReport check_prop81(const QSeries& t1, long kmax) {
  std::vector<long> cnt = count_representations(1, 3, kmax);
  std::vector<Rat> got, want;
  for (long k = 0; k <= kmax; ++k) {
    got.emplace_back(Rat(cnt[k]));
    want.push_back(Rat(k % 4 == 0 ? 3 : 1) * t1.coeff(k));
  }
  return compare("x2_plus_3y2_counts", got, want);
}

CheckReport check_odd_divisors(const QSeries& t1, long kmax) {
  std::vector<long> so = sigma_odd(kmax);
  std::vector<Rat> got, want;
  Rat w(10, 6);
  for (long k = 0; k <= kmax; ++k) {
    got.push_back(w * t1.coeff(k));
    w = w * Rat(1, 10);
    want.push_back(k == 0 ? Rat(1, 24) : Rat(so[k]));
  }
  return compare("odd_divisor_function", got, want);
}

CheckReport check_divisor_difference(const QSeries& t2, long kmax) {
  std::vector<long> so = sigma_odd(2 * kmax), se = sigma_even(2 * kmax);
  std::vector<Rat> got, want;
  Rat w(10, 4);
  for (long k = 0; k <= kmax; ++k) {
    got.push_back(w * t2.coeff(k));
    w = w * Rat(1, 10);
    want.push_back(k == 0 ? Rat(1, 8) : Rat(so[2 * k] - se[2 * k]));
  }
  return compare("odd_minus_even_divisors", got, want);
}

std::vector<CheckReport> hahn_divisibility(long N) {
  std::vector<CheckReport> out;
  QSeries mu = eta_quotient({{{1, 8}, {2, 8}}}, static_cast<int>(N));
  CheckReport h{"hahn_3_divides_mu_3k", range_str(0, N / 3), true, {}, {}};
  for (long k = 0; 3 * k <= N; ++k) {
    Rat c = mu.coeff(3 * k);
    if (!(c * Rat(1, 3)).is_integer()) {
      h.pass = false;
      h.first_failure = k;
      h.detail = "mu_" + std::to_string(3 * k) + " = " + c.str();
      break;
    }
  }
  out.push_back(h);

  QSeries a = Rat(1, 8) * (eisenstein_E2(static_cast<int>(N)) -
                           Rat(9) * eisenstein_E2(static_cast<int>(N)).subst_power(3));
  CheckReport r{"3_divides_eisenstein_difference", range_str(1, N), true, {}, {}};
  for (long k = 1; k <= N; ++k) {
    Rat c = a.coeff(k);
    if (!(c * Rat(1, 3)).is_integer()) {
      r.pass = false;
      r.first_failure = k;
      r.detail = "a_" + std::to_string(k) + " = " + c.str();
      break;
    }
  }
  out.push_back(r);
  return out;
}

std::vector<CheckReport> identity_suite_n1(const SeriesSolution& sol) {
  if (sol.n != 1) throw std::invalid_argument("identity_suite_n1: n = 1 solution expected");
  const int N = sol.order;
  QSeries t1 = Rat(1, 3) * (Rat(2) * theta3(2, 1, N) * theta3(6, 1, N) -
                            theta3(2, -1, N) * theta3(6, -1, N));
  QSeries t2 = Rat(1, 8) * (eisenstein_E2(N) - Rat(9) * eisenstein_E2(N).subst_power(3));
  QSeries t3 = eta_quotient({{{3, 9}, {1, -3}}}, N);
  return {compare("n1_t1_theta", head(sol["t1"], N), head(t1, N)),
          compare("n1_t2_eisenstein", head(sol["t2"], N), head(t2, N)),
          compare("n1_t3_eta", head(sol["t3"], N), head(t3, N))};
}

std::vector<CheckReport> identity_suite_n2(const SeriesSolution& sol) {
  if (sol.n != 2) throw std::invalid_argument("identity_suite_n2: n = 2 solution expected");
  const int N = sol.order;
  auto tab = coefficient_table(sol, N);
  QSeries t1 = Rat(1, 24) * (theta3(2, 1, N).pow(4) + theta2(2, 1, N).pow(4));
  QSeries t2 = Rat(1, 24) * (eisenstein_E2(N) + Rat(2) * eisenstein_E2(N).subst_power(2));
  QSeries t4 = eta_quotient({{{1, 8}, {2, 8}}}, N);
  return {compare("n2_t1_theta", tab[0].values, head(t1, N)),
          compare("n2_t2_eisenstein", tab[1].values, head(t2, N)),
          compare("n2_t4_eta", tab[2].values, head(t4, N))};
}

}  // namespace gmcd
