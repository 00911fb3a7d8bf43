#ifndef GMCD_MPOLY_HPP
#define GMCD_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gmcd/rat.hpp"

namespace gmcd {

inline constexpr int kMaxVars = 24;

// Exponent vector. Exponents may be negative (Laurent monomials): every
// variable of a ring is invertible except the root symbols.
struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};
  int deg = 0;

  int operator[](int i) const { return e[i]; }
  void set(int i, int v);
  bool is_one() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  bool divides(const Monomial& o) const;  // componentwise <=
};

// Graded lexicographic order on the declared variable order.
// Returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct Term {
  Monomial m;
  Rat c;
};

// Sorted by descending grlex, no zero coefficients.
using Terms = std::vector<Term>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A relation symbol^2 = value, with value free of root symbols.
struct RootRelation {
  int var;
  Terms value;
};

class UniverseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Variable universe shared by polynomials: ordered variable names, the
// algebraic context (root relations), and the declared non-monomial
// denominator factors. Immutable once built.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> names,
                      std::vector<RootRelation> relations = {},
                      std::vector<Terms> factors = {});

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index(std::string_view name) const;  // throws if absent
  std::optional<int> find(std::string_view name) const;

  const std::vector<RootRelation>& relations() const { return relations_; }
  const RootRelation* relation(int var) const;
  bool is_root(int var) const { return relation(var) != nullptr; }
  const std::vector<Terms>& factors() const { return factors_; }
  // Index of an existing factor equal to f, if any.
  std::optional<int> factor_index(const Terms& f) const;

  bool same_as(const Ring& o) const;

 private:
  Ring() = default;
  std::vector<std::string> names_;
  std::vector<RootRelation> relations_;
  std::vector<Terms> factors_;
};

// Resolves the ring for a binary operation; null rings are ring-less
// constants. Throws UniverseMismatch for incompatible universes.
const RingPtr& common_ring(const RingPtr& a, const RingPtr& b);

// Sparse multivariate Laurent polynomial over Q, reduced modulo the root
// relations of its ring (exponent <= 1 in every root symbol).
class MPoly {
 public:
  MPoly() = default;
  MPoly(const Rat& c);
  MPoly(int c) : MPoly(Rat(c)) {}
  MPoly(RingPtr ring, const Rat& c);
  MPoly(RingPtr ring, Terms terms);  // terms in any order; normalized

  static MPoly var(const RingPtr& ring, int i);
  static MPoly var(const RingPtr& ring, std::string_view name);
  static MPoly monomial(const RingPtr& ring, const Monomial& m, const Rat& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // throws if not constant
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;

  int degree_in(int var) const;  // max exponent, 0 for zero poly
  int min_degree_in(int var) const;
  MPoly coefficient_in(int var, int d) const;  // coefficient of var^d
  bool contains(int var) const;
  // Per-variable minimum exponent clipped at zero from above.
  Monomial laurent_shift() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned e) const;
  MPoly mul_monomial(const Monomial& m) const;
  MPoly derivative(int var) const;

  // Exact division; returns false if f does not divide *this. f must be a
  // root-free polynomial without negative exponents.
  bool divide_exact(const MPoly& f, MPoly& quotient) const;

  Rat evaluate(std::span<const Rat> point) const;

  // Same variable names, possibly different relations/factors; result is
  // reduced in the target ring.
  MPoly rebind(const RingPtr& target) const;
  // Variables mapped by name into a ring containing all used names.
  MPoly embed(const RingPtr& target) const;

  std::string str() const;

 private:
  void normalize_sorted();
  void reduce_roots();
  RingPtr ring_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

// Terms of a product without reduction (used by Ring-building code).
Terms terms_sorted(Terms t);

}  // namespace gmcd

#endif  // GMCD_MPOLY_HPP
