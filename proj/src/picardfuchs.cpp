#include "gmcd/picardfuchs.hpp"

#include <stdexcept>

namespace gmcd {

mpz_class stirling2(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("stirling2: negative argument");
  if (s == 0) return r == 0 ? 1 : 0;
  if (s > r) return 0;
  // (1/s!) sum_j (-1)^(s-j) C(s,j) j^r
  mpz_class sum = 0, binom = 1, fact = 1, pw;
  for (int j = 0; j <= s; ++j) {
    if (j > 0) binom = binom * (s - j + 1) / j;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(r));
    if ((s - j) % 2 == 0)
      sum += binom * pw;
    else
      sum -= binom * pw;
  }
  for (int k = 2; k <= s; ++k) fact *= k;
  return sum / fact;
}

mpz_class stirling1(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("stirling1: negative argument");
  std::vector<std::vector<mpz_class>> t(r + 1, std::vector<mpz_class>(r + 2, 0));
  t[0][0] = 1;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] - (i - 1) * t[i - 1][j];
  return s > r ? mpz_class(0) : t[r][s];
}

std::string tname(int k) { return "t" + std::to_string(k); }

RingPtr z_ring() {
  auto bare = Ring::make({"z"});
  MPoly f = MPoly::var(bare, 0) - MPoly(bare, Rat(1));
  return Ring::make({"z"}, {}, {f.terms()});
}

RingPtr t_ring(int n) {
  std::vector<std::string> names{"t1", tname(n + 2), "c"};
  auto bare = Ring::make(names);
  MPoly f = MPoly::var(bare, 0).pow(n + 2) - MPoly::var(bare, 1);
  return Ring::make(names, {}, {f.terms()});
}

// ---- DOperator ----

namespace {

void check_same(const DOperator& a, const DOperator& b) {
  common_ring(a.ring, b.ring);
  if (a.var != b.var) throw std::invalid_argument("DOperator: different derivation variables");
}

void trim(std::vector<RatFunc>& c) {
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

std::string paren(const std::string& s) {
  bool simple = s.find_first_of("+-/ ", 1) == std::string::npos;
  return simple ? s : "(" + s + ")";
}

std::string render(const std::vector<RatFunc>& c, const std::string& sym) {
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i].is_zero()) continue;
    std::string coef = c[i].str();
    std::string pw = i == 0 ? "" : i == 1 ? sym : sym + "^" + std::to_string(i);
    std::string term;
    if (pw.empty())
      term = coef;
    else if (coef == "1")
      term = pw;
    else if (coef == "-1")
      term = "-" + pw;
    else
      term = paren(coef) + "*" + pw;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string DOperator::str(const std::string& dsym) const { return render(c, dsym); }

bool operator==(const DOperator& a, const DOperator& b) {
  if (a.var != b.var || a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!(a.c[i] == b.c[i])) return false;
  return true;
}

DOperator d_multiplication(const RingPtr& ring, int var, const RatFunc& f) {
  return DOperator{ring, var, {f}};
}

DOperator d_derivation(const RingPtr& ring, int var) {
  return DOperator{ring, var, {RatFunc(0), RatFunc(1)}};
}

DOperator operator+(const DOperator& a, const DOperator& b) {
  check_same(a, b);
  DOperator r{common_ring(a.ring, b.ring), a.var, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), RatFunc(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  trim(r.c);
  return r;
}

// (a_i D^i)(b_j D^j) = a_i sum_k C(i,k) b_j^(k) D^(i+j-k)
DOperator operator*(const DOperator& a, const DOperator& b) {
  check_same(a, b);
  DOperator r{common_ring(a.ring, b.ring), a.var, {}};
  r.c.assign(a.c.size() + b.c.size() - 1, RatFunc(0));
  for (std::size_t j = 0; j < b.c.size(); ++j) {
    if (b.c[j].is_zero()) continue;
    std::vector<RatFunc> ders{b.c[j]};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      while (ders.size() <= i) ders.push_back(ders.back().derivative(a.var));
      mpz_class binom = 1;
      for (std::size_t k = 0; k <= i; ++k) {
        if (k > 0) binom = binom * static_cast<unsigned long>(i - k + 1) / static_cast<unsigned long>(k);
        if (ders[k].is_zero()) continue;
        r.c[i + j - k] += a.c[i] * ders[k] * RatFunc(Rat(binom));
      }
    }
  }
  trim(r.c);
  return r;
}

DOperator monic(const DOperator& op) {
  DOperator r = op;
  trim(r.c);
  RatFunc lead = r.c.back();
  for (auto& x : r.c) x /= lead;
  return r;
}

// ---- theta form ----

std::string ThetaOperator::str() const { return render(c, "θ"); }

ThetaOperator pf_theta(int n) {
  if (n < 1) throw std::invalid_argument("pf_theta: n must be positive");
  auto zr = z_ring();
  RatFunc z = RatFunc::var(zr, "z");
  // prod_{k=1}^{n+1} (theta + k/(n+2)) as a polynomial in theta
  std::vector<Rat> p{Rat(1)};
  for (int k = 1; k <= n + 1; ++k) {
    std::vector<Rat> q(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] += p[i] * Rat(k, n + 2);
    }
    p = std::move(q);
  }
  ThetaOperator op;
  for (int i = 0; i <= n + 1; ++i) {
    RatFunc ci = -(z * RatFunc(p[i]));
    if (i == n + 1) ci += RatFunc(1);
    op.c.push_back(ci);
  }
  return op;
}

std::string pf_theta_factored(int n) {
  std::string s = "θ^" + std::to_string(n + 1) + " - z";
  for (int k = 1; k <= n + 1; ++k) s += "*(θ + " + Rat(k, n + 2).str() + ")";
  return s;
}

DOperator theta_to_d(const ThetaOperator& op) {
  auto zr = z_ring();
  RatFunc z = RatFunc::var(zr, "z");
  DOperator r{zr, 0, std::vector<RatFunc>(op.c.size(), RatFunc(0))};
  for (std::size_t k = 0; k < op.c.size(); ++k) {
    if (op.c[k].is_zero()) continue;
    if (k == 0) {
      r.c[0] += op.c[0];
      continue;
    }
    for (std::size_t j = 1; j <= k; ++j)
      r.c[j] += op.c[k] * RatFunc(Rat(stirling2(static_cast<int>(k), static_cast<int>(j)))) *
                z.pow(static_cast<int>(j));
  }
  trim(r.c);
  return r;
}

ThetaOperator d_to_theta(const DOperator& op) {
  auto zr = z_ring();
  RatFunc z = RatFunc::var(zr, "z");
  ThetaOperator r;
  r.c.assign(op.c.size(), RatFunc(0));
  for (std::size_t j = 0; j < op.c.size(); ++j) {
    if (op.c[j].is_zero()) continue;
    RatFunc lead = op.c[j] * z.pow(-static_cast<int>(j));
    for (std::size_t k = 0; k <= j; ++k) {
      mpz_class s = stirling1(static_cast<int>(j), static_cast<int>(k));
      if (s != 0) r.c[k] += lead * RatFunc(Rat(s));
    }
  }
  trim(r.c);
  return r;
}

RatFunc theta_subleading(int n) {
  ThetaOperator op = pf_theta(n);
  return -op.c[n] / op.c[n + 1];
}

SymMat companion_matrix(int n) {
  DOperator d = monic(theta_to_d(pf_theta(n)));
  SymMat a = zeros<RatFunc>(n + 1, n + 1);
  for (int i = 0; i < n; ++i) a(i, i + 1) = RatFunc(1);
  for (int j = 0; j <= n; ++j) a(n, j) = -d.c[j];
  return a;
}

DOperator pf_t1(int n) {
  auto tr = t_ring(n);
  RatFunc t1 = RatFunc::var(tr, "t1"), tn = RatFunc::var(tr, tname(n + 2));
  RatFunc zimage = tn * t1.pow(-(n + 2));
  ThetaOperator l = pf_theta(n);
  // theta_z = z d/dz = -(1/(n+2)) t1 d/dt1 when t<n+2> is held fixed
  DOperator theta = d_multiplication(tr, 0, t1 * RatFunc(Rat(-1, n + 2))) * d_derivation(tr, 0);
  DOperator acc = d_multiplication(tr, 0, RatFunc(0));
  DOperator power = d_multiplication(tr, 0, RatFunc(1));
  auto zr = z_ring();
  for (std::size_t i = 0; i < l.c.size(); ++i) {
    if (i > 0) power = theta * power;
    RatFunc coef = l.c[i].substitute(std::map<int, RatFunc>{{0, zimage}}, tr);
    acc = acc + d_multiplication(tr, 0, coef) * power;
  }
  return monic(acc * d_multiplication(tr, 0, t1));
}

std::vector<RatFunc> pf_t1_reduction(int n) {
  DOperator op = pf_t1(n);
  std::vector<RatFunc> p;
  for (int k = 0; k <= n; ++k) p.push_back(-op.c[k]);
  return p;
}

std::vector<RatFunc> pf_t1_closed_form(int n) {
  auto tr = t_ring(n);
  RatFunc t1 = RatFunc::var(tr, "t1");
  RatFunc d(MPoly(tr, tr->factors()[0]));
  std::vector<RatFunc> p;
  for (int k = 0; k <= n; ++k)
    p.push_back(-RatFunc(Rat(stirling2(n + 2, k + 1))) * t1.pow(k + 1) / d);
  return p;
}

}  // namespace gmcd
