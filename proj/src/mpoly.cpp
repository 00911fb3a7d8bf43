#include "gmcd/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace gmcd {

void Monomial::set(int i, int v) {
  if (v < std::numeric_limits<std::int16_t>::min() ||
      v > std::numeric_limits<std::int16_t>::max())
    throw std::overflow_error("Monomial: exponent out of range");
  deg += v - e[i];
  e[i] = static_cast<std::int16_t>(v);
}

bool Monomial::is_one() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= static_cast<std::uint16_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

bool terms_equal(const Terms& a, const Terms& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].m == b[i].m) || !(a[i].c == b[i].c)) return false;
  return true;
}

Terms from_map(std::unordered_map<Monomial, Rat, MonomialHash>& acc) {
  Terms out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return grlex_cmp(x.m, y.m) > 0; });
  return out;
}

Terms mul_terms(const Terms& a, const Terms& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const Terms& one = a.size() == 1 ? a : b;
    const Terms& many = a.size() == 1 ? b : a;
    Terms out;
    out.reserve(many.size());
    for (const auto& t : many) out.push_back({t.m * one[0].m, t.c * one[0].c});
    return out;  // order preserved by monomial multiplication
  }
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      auto [it, fresh] = acc.try_emplace(x.m * y.m, x.c);
      if (fresh)
        it->second *= y.c;
      else
        it->second += x.c * y.c;
    }
  return from_map(acc);
}

// a + s*b for sorted term lists.
Terms merge_add(const Terms& a, const Terms& b, int s) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : grlex_cmp(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, s > 0 ? b[j].c : -b[j].c});
      ++j;
    } else {
      Rat v = s > 0 ? a[i].c + b[j].c : a[i].c - b[j].c;
      if (!v.is_zero()) out.push_back({a[i].m, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Terms terms_sorted(Terms t) {
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  for (auto& x : t) {
    auto [it, fresh] = acc.try_emplace(x.m, x.c);
    if (!fresh) it->second += x.c;
  }
  return from_map(acc);
}

// ---- Ring ----

RingPtr Ring::make(std::vector<std::string> names, std::vector<RootRelation> relations,
                   std::vector<Terms> factors) {
  if (names.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("Ring: too many variables");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw std::invalid_argument("Ring: empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("Ring: duplicate variable '" + names[i] + "'");
  }
  auto r = std::shared_ptr<Ring>(new Ring());
  r->names_ = std::move(names);
  for (auto& rel : relations) {
    if (rel.var < 0 || rel.var >= r->nvars())
      throw std::invalid_argument("Ring: relation on unknown variable");
    rel.value = terms_sorted(std::move(rel.value));
    r->relations_.push_back(std::move(rel));
  }
  for (const auto& rel : r->relations_)
    for (const auto& t : rel.value)
      for (const auto& other : r->relations_)
        if (t.m[other.var] != 0)
          throw std::invalid_argument("Ring: relation value contains a root symbol");
  for (auto& f : factors) r->factors_.push_back(terms_sorted(std::move(f)));
  return r;
}

int Ring::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UniverseMismatch("variable '" + std::string(name) + "' is not in the ring");
}

std::optional<int> Ring::find(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

const RootRelation* Ring::relation(int var) const {
  for (const auto& r : relations_)
    if (r.var == var) return &r;
  return nullptr;
}

std::optional<int> Ring::factor_index(const Terms& f) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (terms_equal(factors_[i], f)) return static_cast<int>(i);
  return std::nullopt;
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  if (names_ != o.names_ || relations_.size() != o.relations_.size() ||
      factors_.size() != o.factors_.size())
    return false;
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].var != o.relations_[i].var ||
        !terms_equal(relations_[i].value, o.relations_[i].value))
      return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!terms_equal(factors_[i], o.factors_[i])) return false;
  return true;
}

const RingPtr& common_ring(const RingPtr& a, const RingPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->same_as(*b)) return a;
  throw UniverseMismatch("variable-universe mismatch");
}

// ---- MPoly ----

MPoly::MPoly(const Rat& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

MPoly::MPoly(RingPtr ring, const Rat& c) : ring_(std::move(ring)) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

MPoly::MPoly(RingPtr ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize_sorted();
  reduce_roots();
}

MPoly MPoly::var(const RingPtr& ring, int i) {
  if (!ring || i < 0 || i >= ring->nvars())
    throw std::out_of_range("MPoly::var: bad variable index");
  Monomial m;
  m.set(i, 1);
  MPoly p;
  p.ring_ = ring;
  p.terms_.push_back({m, Rat(1)});
  return p;
}

MPoly MPoly::var(const RingPtr& ring, std::string_view name) {
  return var(ring, ring->index(name));
}

MPoly MPoly::monomial(const RingPtr& ring, const Monomial& m, const Rat& c) {
  return MPoly(ring, Terms{{m, c}});
}

void MPoly::normalize_sorted() { terms_ = terms_sorted(std::move(terms_)); }

void MPoly::reduce_roots() {
  if (!ring_ || ring_->relations().empty()) return;
  bool needed = false;
  for (const auto& t : terms_)
    for (const auto& rel : ring_->relations()) {
      if (t.m[rel.var] < 0)
        throw std::domain_error("negative power of root symbol " + ring_->name(rel.var));
      if (t.m[rel.var] >= 2) needed = true;
    }
  if (!needed) return;
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  for (const auto& t : terms_) {
    Terms cur{t};
    for (const auto& rel : ring_->relations()) {
      int e = t.m[rel.var];
      if (e < 2) continue;
      for (auto& x : cur) x.m.set(rel.var, e % 2);
      Terms vp{{Monomial{}, Rat(1)}};
      for (int k = 0; k < e / 2; ++k) vp = mul_terms(vp, rel.value);
      cur = mul_terms(cur, vp);
    }
    for (auto& x : cur) {
      auto [it, fresh] = acc.try_emplace(x.m, x.c);
      if (!fresh) it->second += x.c;
    }
  }
  terms_ = from_map(acc);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

Rat MPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("MPoly: not a constant: " + str());
  return terms_.empty() ? Rat(0) : terms_[0].c;
}

int MPoly::total_degree() const { return terms_.empty() ? 0 : terms_[0].m.deg; }

int MPoly::degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, t.m[var]);
  return d;
}

int MPoly::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, t.m[var]);
  return d;
}

MPoly MPoly::coefficient_in(int var, int d) const {
  Terms out;
  for (const auto& t : terms_)
    if (t.m[var] == d) {
      Term x = t;
      x.m.set(var, 0);
      out.push_back(std::move(x));
    }
  MPoly p;
  p.ring_ = ring_;
  p.terms_ = terms_sorted(std::move(out));
  return p;
}

bool MPoly::contains(int var) const {
  for (const auto& t : terms_)
    if (t.m[var] != 0) return true;
  return false;
}

Monomial MPoly::laurent_shift() const {
  Monomial s;
  for (int i = 0; i < kMaxVars; ++i) {
    int lo = 0;
    for (const auto& t : terms_) lo = std::min(lo, static_cast<int>(t.m[i]));
    if (lo < 0) s.set(i, -lo);
  }
  return s;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  ring_ = common_ring(ring_, o.ring_);
  terms_ = merge_add(terms_, o.terms_, 1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  ring_ = common_ring(ring_, o.ring_);
  terms_ = merge_add(terms_, o.terms_, -1);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly p;
  p.ring_ = common_ring(a.ring_, b.ring_);
  p.terms_ = mul_terms(a.terms_, b.terms_);
  p.reduce_roots();
  return p;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  common_ring(a.ring_, b.ring_);
  return terms_equal(a.terms_, b.terms_);
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(ring_, Rat(1));
  MPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::mul_monomial(const Monomial& m) const {
  MPoly p;
  p.ring_ = ring_;
  p.terms_ = mul_terms(terms_, Terms{{m, Rat(1)}});
  p.reduce_roots();
  return p;
}

MPoly MPoly::derivative(int var) const {
  Terms out;
  for (const auto& t : terms_) {
    int e = t.m[var];
    if (e == 0) continue;
    Term x{t.m, t.c * Rat(e)};
    x.m.set(var, e - 1);
    out.push_back(std::move(x));
  }
  MPoly p;
  p.ring_ = ring_;
  p.terms_ = std::move(out);  // derivative keeps grlex order up to ties
  p.normalize_sorted();
  return p;
}

bool MPoly::divide_exact(const MPoly& f, MPoly& quotient) const {
  if (f.is_zero()) throw std::domain_error("MPoly: division by zero polynomial");
  const RingPtr& r = common_ring(ring_, f.ring_);
  Monomial shift = laurent_shift();
  Terms rem = mul_terms(terms_, Terms{{shift, Rat(1)}});
  const Term lf = f.terms_.front();
  Terms q;
  while (!rem.empty()) {
    const Term& lt = rem.front();
    if (!lf.m.divides(lt.m)) return false;
    Term t{lt.m / lf.m, lt.c / lf.c};
    Terms sub = mul_terms(f.terms_, Terms{t});
    rem = merge_add(rem, sub, -1);
    q.push_back(std::move(t));
  }
  Monomial unshift;
  for (int i = 0; i < kMaxVars; ++i) unshift.set(i, -shift[i]);
  quotient = MPoly();
  quotient.ring_ = r;
  quotient.terms_ = mul_terms(q, Terms{{unshift, Rat(1)}});
  return true;
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
  Rat sum(0);
  for (const auto& t : terms_) {
    Rat v = t.c;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.m[i] == 0) continue;
      if (static_cast<std::size_t>(i) >= point.size())
        throw std::out_of_range("MPoly::evaluate: point too short");
      v *= point[i].pow(t.m[i]);
    }
    sum += v;
  }
  return sum;
}

MPoly MPoly::rebind(const RingPtr& target) const {
  if (ring_ && target && ring_->names() != target->names())
    throw UniverseMismatch("rebind: variable names differ");
  return MPoly(target, terms_);
}

MPoly MPoly::embed(const RingPtr& target) const {
  if (!ring_) return MPoly(target, terms_);
  std::vector<int> map(ring_->nvars(), -1);
  Terms out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term x{Monomial{}, t.c};
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.m[i] == 0) continue;
      if (map[i] < 0) map[i] = target->index(ring_->name(i));
      x.m.set(map[i], t.m[i]);
    }
    out.push_back(std::move(x));
  }
  return MPoly(target, std::move(out));
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat a = t.c.abs();
    if (first)
      os << (t.c.sign() < 0 ? "-" : "");
    else
      os << (t.c.sign() < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = t.m[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_ ? ring_->name(i) : ("x" + std::to_string(i));
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      os << a.str();
    else if (a.is_one())
      os << mono;
    else
      os << a.str() << "*" << mono;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

}  // namespace gmcd
