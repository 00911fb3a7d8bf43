#include "gmcd/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace gmcd {

namespace {

void trim(std::vector<int>& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

MPoly raise(const MPoly& p, int e) { return e == 0 ? MPoly(p.ring(), Rat(1)) : p.pow(e); }

}  // namespace

RatFunc::RatFunc(MPoly num, std::vector<int> den) : num_(std::move(num)), den_(std::move(den)) {
  for (int k : den_)
    if (k < 0) throw std::invalid_argument("RatFunc: negative denominator exponent");
  if (!den_.empty() && (!ring() || den_.size() > ring()->factors().size()))
    throw std::invalid_argument("RatFunc: denominator refers to undeclared factor");
  cancel();
}

MPoly RatFunc::factor(int i) const { return MPoly(ring(), ring()->factors()[i]); }

void RatFunc::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    MPoly f = factor(static_cast<int>(i));
    MPoly q;
    while (den_[i] > 0 && num_.divide_exact(f, q)) {
      num_ = std::move(q);
      --den_[i];
    }
  }
  trim(den_);
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFunc: not a constant: " + str());
  return num_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) {
    common_ring(ring(), o.ring());
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    cancel();
    return *this;
  }
  std::size_t n = std::max(den_.size(), o.den_.size());
  std::vector<int> a = den_, b = o.den_, m(n);
  a.resize(n);
  b.resize(n);
  MPoly x = num_, y = o.num_;
  const RingPtr& r = common_ring(ring(), o.ring());
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = std::max(a[i], b[i]);
    MPoly f(r, r->factors()[i]);
    if (m[i] > a[i]) x *= raise(f, m[i] - a[i]);
    if (m[i] > b[i]) y *= raise(f, m[i] - b[i]);
  }
  num_ = x + y;
  den_ = std::move(m);
  cancel();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  if (o.den_.size() > den_.size()) den_.resize(o.den_.size());
  for (std::size_t i = 0; i < o.den_.size(); ++i) den_[i] += o.den_[i];
  cancel();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: division by zero");
  const RingPtr& r = ring();
  if (!r) return RatFunc(MPoly(num_.constant_value().inverse()));
  MPoly n = num_;
  MPoly conj(r, Rat(1));
  for (const auto& rel : r->relations()) {
    if (!n.contains(rel.var)) continue;
    MPoly c = n.coefficient_in(rel.var, 0) - n.coefficient_in(rel.var, 1) * MPoly::var(r, rel.var);
    conj *= c;
    n *= c;
  }
  std::vector<int> j(r->factors().size(), 0);
  for (std::size_t i = 0; i < j.size() && !n.is_monomial(); ++i) {
    MPoly f = factor(static_cast<int>(i));
    MPoly q;
    while (!n.is_monomial() && n.divide_exact(f, q)) {
      n = std::move(q);
      ++j[i];
    }
  }
  if (!n.is_monomial())
    throw UndeclaredFactor("denominator has an undeclared factor: " + n.str());
  const Term& t = n.leading();
  Monomial inv;
  for (int i = 0; i < kMaxVars; ++i) inv.set(i, -t.m[i]);
  MPoly out = conj.mul_monomial(inv) * t.c.inverse();
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i] > 0) out *= raise(factor(static_cast<int>(i)), den_[i]);
  trim(j);
  return RatFunc(std::move(out), std::move(j));
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(MPoly(ring(), Rat(1)));
  RatFunc base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RatFunc RatFunc::derivative(int var) const {
  RatFunc out(num_.derivative(var), den_);
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    MPoly df = factor(static_cast<int>(i)).derivative(var);
    if (df.is_zero()) continue;
    std::vector<int> d = den_;
    ++d[i];
    out += RatFunc(num_ * df * Rat(-den_[i]), d);
  }
  return out;
}

RatFunc RatFunc::derivative(std::string_view var) const {
  if (!ring()) return RatFunc(0);
  return derivative(ring()->index(var));
}

RatFunc RatFunc::substitute(const std::map<int, RatFunc>& values, const RingPtr& target) const {
  const RingPtr& r = ring();
  if (!r) return RatFunc(MPoly(target, num_.terms()));
  std::vector<std::vector<RatFunc>> powcache(r->nvars());
  auto image = [&](int v) -> RatFunc {
    auto it = values.find(v);
    if (it != values.end()) return it->second;
    return RatFunc(MPoly::var(target, target->index(r->name(v))));
  };
  auto power = [&](int v, int e) -> RatFunc {
    auto& pc = powcache[v];
    if (pc.empty()) {
      pc.push_back(RatFunc(MPoly(target, Rat(1))));
      pc.push_back(image(v));
    }
    int a = e < 0 ? -e : e;
    while (static_cast<int>(pc.size()) <= a) pc.push_back(pc.back() * pc[1]);
    return e < 0 ? pc[a].inverse() : pc[a];
  };
  auto subst_poly = [&](const MPoly& p) {
    RatFunc acc(MPoly(target, Rat(0)));
    for (const auto& t : p.terms()) {
      RatFunc term(MPoly(target, t.c));
      for (int v = 0; v < r->nvars(); ++v)
        if (t.m[v] != 0) term *= power(v, t.m[v]);
      acc += term;
    }
    return acc;
  };
  RatFunc out = subst_poly(num_);
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i] > 0) out /= subst_poly(factor(static_cast<int>(i))).pow(den_[i]);
  return out;
}

RatFunc RatFunc::substitute(const std::map<std::string, RatFunc>& values,
                            const RingPtr& target) const {
  std::map<int, RatFunc> byindex;
  if (ring())
    for (const auto& [name, v] : values)
      if (auto i = ring()->find(name)) byindex.emplace(*i, v);
  return substitute(byindex, target);
}

Rat RatFunc::evaluate(std::span<const Rat> point) const {
  Rat v = num_.evaluate(point);
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    Rat f = factor(static_cast<int>(i)).evaluate(point);
    if (f.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
    v /= f.pow(den_[i]);
  }
  return v;
}

std::string RatFunc::str() const {
  if (num_.is_zero()) return "0";
  Monomial shift = num_.laurent_shift();
  MPoly top = num_.mul_monomial(shift);
  mpz_class lcm = 1;
  for (const auto& t : top.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.c.den().get_mpz_t());
  Rat scale(lcm);
  top *= scale;
  Rat dcoef = scale;

  std::vector<std::string> parts;
  if (!dcoef.is_one()) parts.push_back(dcoef.str());
  for (int i = 0; i < kMaxVars; ++i) {
    if (shift[i] == 0) continue;
    std::string s = ring()->name(i);
    if (shift[i] != 1) s += "^" + std::to_string(shift[i]);
    parts.push_back(s);
  }
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    std::string s = "(" + factor(static_cast<int>(i)).str() + ")";
    if (den_[i] != 1) s += "^" + std::to_string(den_[i]);
    parts.push_back(s);
  }
  std::string ts = top.str();
  if (parts.empty()) return ts;
  if (top.size() > 1) ts = "(" + ts + ")";
  std::string ds;
  for (std::size_t i = 0; i < parts.size(); ++i) ds += (i ? "*" : "") + parts[i];
  if (parts.size() > 1) ds = "(" + ds + ")";
  return ts + "/" + ds;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

// ---- parser ----

namespace {

class Parser {
 public:
  Parser(std::string text, const RingPtr& ring) : s_(std::move(text)), ring_(ring) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RatFunc constant(const Rat& c) const { return RatFunc(MPoly(ring_, c)); }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      skip();
      if (s_.compare(pos_, 2, "**") == 0) return v;
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else
        return v;
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = atom();
    skip();
    bool caret = eat('^');
    if (!caret && s_.compare(pos_, 2, "**") == 0) {
      pos_ += 2;
      caret = true;
    }
    if (!caret) return base;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    bool paren = eat('(');
    if (paren && eat('-')) neg = !neg;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(s_.substr(start, pos_ - start));
    if (paren && !eat(')')) fail("expected ')'");
    return base.pow(neg ? -e : e);
  }
  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal literals are not exact");
      return constant(Rat(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (!ring_) throw UniverseMismatch("variable '" + name + "' in a ring-less context");
      return RatFunc(MPoly::var(ring_, name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const RingPtr& ring) {
  std::string s(text);
  for (std::size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(p, 3, "-");
  return Parser(std::move(s), ring).parse();
}

}  // namespace gmcd
