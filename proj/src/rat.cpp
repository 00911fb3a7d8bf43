#include "gmcd/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace gmcd {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    auto b = x.find_first_not_of(" \t");
    auto e = x.find_last_not_of(" \t");
    x = (b == std::string::npos) ? std::string() : x.substr(b, e - b + 1);
  };
  trim(s);
  // The typographic minus shows up in hand-written configs.
  for (std::size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;)
    s.replace(p, 3, "-");
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  for (char ch : s) {
    bool ok = (ch >= '0' && ch <= '9') || ch == '-' || ch == '+' || ch == '/';
    if (!ok)
      throw std::invalid_argument("Rat::parse: not an exact rational: '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(s));
    mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
  }
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(mpq_class(n, d));
}

bool Rat::exact_sqrt(Rat& root) const {
  if (sign() < 0) return false;
  if (!mpz_perfect_square_p(v_.get_num_mpz_t()) ||
      !mpz_perfect_square_p(v_.get_den_mpz_t()))
    return false;
  mpz_class n = sqrt(v_.get_num()), d = sqrt(v_.get_den());
  root = Rat(n, d);
  return true;
}

std::size_t Rat::hash() const {
  std::size_t h = mpz_get_ui(v_.get_num_mpz_t()) * 0x9E3779B97F4A7C15ull;
  h ^= mpz_get_ui(v_.get_den_mpz_t()) + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(sgn(v_) + 1);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace gmcd
