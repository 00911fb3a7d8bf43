#ifndef GMCD_RAT_HPP
#define GMCD_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gmcd {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin value wrapper over mpq_class so that arithmetic never
// leaks gmpxx expression templates into generic (Eigen) code.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}
  Rat(long v) : v_(v) {}
  Rat(long long v) : v_(mpz_class(std::to_string(v))) {}
  Rat(long num, long den);
  explicit Rat(const mpz_class& v) : v_(v) {}
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "-p", "p/q"; rejects anything with a decimal point.
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat pow(long e) const;

  // Exact square root if this is the square of a rational.
  bool exact_sqrt(Rat& root) const;

  std::string str() const { return v_.get_str(); }
  std::size_t hash() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace gmcd

template <>
struct std::hash<gmcd::Rat> {
  std::size_t operator()(const gmcd::Rat& r) const { return r.hash(); }
};

#endif  // GMCD_RAT_HPP
