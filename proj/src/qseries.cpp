#include "gmcd/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmcd {

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

long sat_add(long a, long b) {
  if (a >= kInf || b >= kInf) return kInf;
  return a + b;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Number of lattice points offset + step*k below prec.
long lattice_count(long offset, long step, long prec) {
  if (prec <= offset) return 0;
  return floor_div(prec - offset - 1, step) + 1;
}

}  // namespace

QSeries QSeries::constant(const Rat& c, long prec_units) {
  return QSeries(0, kUnit, {c}, prec_units);
}

QSeries QSeries::integral(const std::vector<Rat>& coeffs, long order) {
  return QSeries(0, kUnit, coeffs, (order + 1) * kUnit);
}

QSeries::QSeries(long offset, long step, std::vector<Rat> coeffs, long prec)
    : offset_(offset), step_(step), c_(std::move(coeffs)), prec_(prec) {
  if (step_ <= 0) throw std::invalid_argument("QSeries: step must be positive");
  trim();
}

void QSeries::trim() {
  long keep = lattice_count(offset_, step_, prec_);
  if (static_cast<long>(c_.size()) > keep) c_.resize(std::max(0L, keep));
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    offset_ = 0;
    step_ = kUnit;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    offset_ += static_cast<long>(lead) * step_;
  }
  // Coarsen the lattice to the gcd of the occupied differences.
  long g = 0;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) g = std::gcd(g, static_cast<long>(i));
  if (g > 1) {
    std::vector<Rat> d;
    for (std::size_t i = 0; i < c_.size(); i += static_cast<std::size_t>(g)) d.push_back(c_[i]);
    c_ = std::move(d);
    step_ *= g;
  } else if (c_.size() == 1) {
    step_ = kUnit;
  }
}

bool QSeries::is_integral() const {
  return c_.empty() || (offset_ % kUnit == 0 && step_ % kUnit == 0);
}

Rat QSeries::coeff_units(long e) const {
  if (e >= prec_) throw std::out_of_range("QSeries: coefficient beyond truncation");
  if (c_.empty() || e < offset_ || (e - offset_) % step_ != 0) return Rat(0);
  long k = (e - offset_) / step_;
  return k < static_cast<long>(c_.size()) ? c_[k] : Rat(0);
}

std::vector<Rat> QSeries::coeffs(long kmax) const {
  std::vector<Rat> out;
  out.reserve(kmax + 1);
  for (long k = 0; k <= kmax; ++k) out.push_back(coeff(k));
  return out;
}

long QSeries::valuation() const { return c_.empty() ? prec_ : offset_; }

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long prec = std::min(a.prec_, b.prec_);
  if (a.c_.empty()) return QSeries(b.offset_, b.step_, b.c_, prec);
  if (b.c_.empty()) return QSeries(a.offset_, a.step_, a.c_, prec);
  long g = std::gcd(std::gcd(a.step_, b.step_), std::labs(a.offset_ - b.offset_));
  if (g == 0) g = a.step_;
  long o = std::min(a.offset_, b.offset_);
  long top = std::max(a.offset_ + a.step_ * static_cast<long>(a.c_.size()),
                      b.offset_ + b.step_ * static_cast<long>(b.c_.size()));
  top = std::min(top, prec);
  long n = lattice_count(o, g, top);
  std::vector<Rat> c(std::max(0L, n));
  for (const QSeries* s : {&a, &b})
    for (std::size_t i = 0; i < s->c_.size(); ++i) {
      long e = s->offset_ + s->step_ * static_cast<long>(i);
      if (e >= prec) break;
      c[(e - o) / g] += s->c_[i];
    }
  return QSeries(o, g, std::move(c), prec);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  long prec = std::min(sat_add(a.prec_, b.valuation()), sat_add(b.prec_, a.valuation()));
  if (a.c_.empty() || b.c_.empty()) return QSeries(0, QSeries::kUnit, {}, prec);
  long g = std::gcd(a.step_, b.step_);
  long o = a.offset_ + b.offset_;
  long n = lattice_count(o, g, prec);
  long full = (a.step_ * static_cast<long>(a.c_.size() - 1) +
               b.step_ * static_cast<long>(b.c_.size() - 1)) / g + 1;
  n = std::min(n, full);
  std::vector<Rat> c(std::max(0L, n));
  long ra = a.step_ / g, rb = b.step_ / g;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    long base = ra * static_cast<long>(i);
    if (base >= n) break;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      long k = base + rb * static_cast<long>(j);
      if (k >= n) break;
      if (!b.c_[j].is_zero()) c[k] += a.c_[i] * b.c_[j];
    }
  }
  return QSeries(o, g, std::move(c), prec);
}

QSeries operator*(const Rat& s, const QSeries& a) {
  QSeries r = a;
  if (s.is_zero()) return QSeries(0, QSeries::kUnit, {}, a.prec_);
  for (auto& x : r.c_) x *= s;
  return r;
}

QSeries QSeries::inverse() const {
  if (c_.empty()) throw std::domain_error("QSeries: inverse of a series with zero leading coefficient");
  long v = offset_;
  if (prec_ >= kInf && c_.size() == 1)
    return QSeries(-v, kUnit, {c_[0].inverse()}, kInf);
  if (prec_ >= kInf) throw std::domain_error("QSeries: inverse of an exact polynomial needs a truncation");
  long rel = prec_ - v;
  long n = lattice_count(0, step_, rel);
  std::vector<Rat> b(n);
  Rat inv0 = c_[0].inverse();
  b[0] = inv0;
  for (long k = 1; k < n; ++k) {
    Rat acc(0);
    long jmax = std::min(k, static_cast<long>(c_.size()) - 1);
    for (long j = 1; j <= jmax; ++j)
      if (!c_[j].is_zero()) acc += c_[j] * b[k - j];
    b[k] = -(acc * inv0);
  }
  return QSeries(-v, step_, std::move(b), sat_add(-v, rel));
}

QSeries QSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QSeries result = constant(Rat(1), kInf);
  QSeries base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QSeries QSeries::truncated(long prec_units) const {
  return QSeries(offset_, step_, c_, std::min(prec_, prec_units));
}

QSeries QSeries::sign_flip() const {
  if (!is_integral())
    throw std::domain_error("QSeries: q -> -q needs integral exponents");
  QSeries r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    long e = (offset_ + step_ * static_cast<long>(i)) / kUnit;
    if (e % 2 != 0) r.c_[i] = -r.c_[i];
  }
  return r;
}

QSeries QSeries::scale(const Rat& lambda) const {
  if (!is_integral()) throw std::domain_error("QSeries: q -> q/lambda needs integral exponents");
  QSeries r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    long e = (offset_ + step_ * static_cast<long>(i)) / kUnit;
    r.c_[i] *= lambda.pow(-e);
  }
  return r;
}

QSeries QSeries::subst_power(long m) const {
  if (m <= 0) throw std::invalid_argument("QSeries: q -> q^m needs m > 0");
  long prec = prec_ >= kInf ? kInf : prec_ * m;
  return QSeries(offset_ * m, step_ * m, c_, prec);
}

QSeries QSeries::q_derivative() const {
  QSeries r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] *= Rat(offset_ + step_ * static_cast<long>(i), kUnit);
  r.trim();
  return r;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    long e = offset_ + step_ * static_cast<long>(i);
    Rat a = c_[i].abs();
    os << (first ? (c_[i].sign() < 0 ? "-" : "") : (c_[i].sign() < 0 ? " - " : " + "));
    first = false;
    Rat ex(e, kUnit);
    std::string qs = ex.is_zero() ? "" : ex.is_one() ? "q" : ex.is_integer() ? "q^" + ex.str() : "q^(" + ex.str() + ")";
    if (qs.empty())
      os << a.str();
    else if (a.is_one())
      os << qs;
    else
      os << a.str() << "*" << qs;
  }
  if (prec_ < kInf) {
    Rat ex(prec_, kUnit);
    os << (first ? "" : " + ") << "O(q^" << (ex.is_integer() ? ex.str() : "(" + ex.str() + ")") << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

}  // namespace gmcd
