#ifndef GMCD_RATFUNC_HPP
#define GMCD_RATFUNC_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gmcd/mpoly.hpp"

namespace gmcd {

class UndeclaredFactor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Rational function num / prod_i F_i^{k_i} where F_i are the declared
// factors of the ring and num is a Laurent polynomial. Kept in lowest terms:
// num is not divisible by any F_i with k_i > 0.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int c) : num_(Rat(c)) {}
  RatFunc(const Rat& c) : num_(c) {}
  RatFunc(MPoly num) : num_(std::move(num)) {}
  RatFunc(MPoly num, std::vector<int> den);

  static RatFunc var(const RingPtr& ring, std::string_view name) {
    return RatFunc(MPoly::var(ring, name));
  }

  const RingPtr& ring() const { return num_.ring(); }
  const MPoly& num() const { return num_; }
  // Exponent of each declared factor in the denominator (may be shorter
  // than the factor list; missing entries are zero).
  const std::vector<int>& den() const { return den_; }
  bool is_polynomial() const { return den_.empty(); }  // Laurent polynomial

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Rat constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc derivative(int var) const;
  RatFunc derivative(std::string_view var) const;

  // Replaces variables by values; unmapped variables are embedded by name
  // into the target ring.
  RatFunc substitute(const std::map<int, RatFunc>& values, const RingPtr& target) const;
  RatFunc substitute(const std::map<std::string, RatFunc>& values,
                     const RingPtr& target) const;
  Rat evaluate(std::span<const Rat> point) const;

  std::string str() const;

 private:
  void cancel();
  MPoly factor(int i) const;
  MPoly num_;
  std::vector<int> den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

// Recursive-descent parser for + - * / ^ ( ) over integers and the
// variable names of the ring. Unknown names raise UniverseMismatch.
RatFunc parse_ratfunc(std::string_view text, const RingPtr& ring);

}  // namespace gmcd

#endif  // GMCD_RATFUNC_HPP
