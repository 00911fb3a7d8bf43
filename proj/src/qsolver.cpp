#include "gmcd/qsolver.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "gmcd/picardfuchs.hpp"

namespace gmcd {

SolverConfig SolverConfig::defaults(int n) {
  SolverConfig c;
  c.n = n;
  switch (n) {
    case 1:
      c.c = Rat(1, 27);
      c.t10 = Rat(1, 3);
      c.free_coord = "t3";
      c.free_value = Rat(1);
      break;
    case 2:
      c.c = Rat(-1, 64);
      c.k0 = Rat(8);
      c.t10 = Rat(1, 40);
      c.free_coord = "t3";
      c.free_value = Rat(-1);
      break;
    case 3:
      c.c = Rat(1, 3125);
      c.t10 = Rat(1, 5);
      c.t20 = Rat(-1);
      c.free_coord = "t5";
      c.free_value = Rat(1);
      break;
    case 4:
      c.k0 = Rat(1, 216);
      c.c = Rat(1, 46656);
      c.t10 = Rat(1, 36);
      c.t20 = Rat(-1);
      c.free_coord = "t8";
      c.free_value = Rat(49, 18);
      break;
    default:
      throw std::invalid_argument("SolverConfig: no defaults for n = " + std::to_string(n));
  }
  return c;
}

const QSeries& SeriesSolution::operator[](const std::string& coord) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == coord) return series[i];
  throw std::out_of_range("SeriesSolution: no coordinate " + coord);
}

VectorField specialized_field(const SolverConfig& cfg) {
  return specialize(derive_R(cfg.n), cfg.c);
}

namespace {

std::size_t coord_index(const VectorField& vf, const std::string& name) {
  for (std::size_t i = 0; i < vf.coords.size(); ++i)
    if (vf.coords[i] == name) return i;
  throw std::invalid_argument("unknown coordinate " + name);
}

// Point in ring variable order from values in coordinate order.
std::vector<Rat> ring_point(const VectorField& vf, const std::vector<Rat>& p) {
  std::vector<Rat> pt(vf.ring->nvars());
  for (std::size_t i = 0; i < vf.coords.size(); ++i) {
    auto v = vf.ring->find(vf.coords[i]);
    if (v) pt[*v] = p[i];
  }
  for (int v = 0; v < vf.ring->nvars(); ++v)
    if (vf.ring->name(v) == "c") throw SolverError("vector field still depends on c");
  return pt;
}

const RootRelation* root_of(const VectorField& vf) {
  return vf.ring->relations().empty() ? nullptr : &vf.ring->relations().front();
}

// Straight-line program computing series coefficients of the components one
// order at a time.
class SeriesProgram {
 public:
  explicit SeriesProgram(const VectorField& vf) : ring_(vf.ring) {
    for (std::size_t i = 0; i < vf.coords.size(); ++i) {
      int v = ring_->index(vf.coords[i]);
      var_node_[v] = add(node(Op::Var));
      inputs_.push_back(var_node_[v]);
    }
    for (const auto& f : vf.comps) outputs_.push_back(compile(f));
  }

  std::size_t inputs() const { return inputs_.size(); }
  void set_input(std::size_t i, int k, const Rat& v) { coef(inputs_[i], k) = v; }
  Rat output(std::size_t i, int k) const { return nodes_[outputs_[i]].c.at(k); }

  // Computes coefficient k of every node from coefficients 0..k of its inputs.
  void eval(int k) {
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      Node& nd = nodes_[id];
      if (nd.op == Op::Var) {
        coef(static_cast<int>(id), k);
        continue;
      }
      Rat r;
      switch (nd.op) {
        case Op::Const:
          r = k == 0 ? nd.value : Rat(0);
          break;
        case Op::Sum:
          for (std::size_t j = 0; j < nd.args.size(); ++j) {
            const Rat& x = nodes_[nd.args[j]].c[k];
            if (!x.is_zero()) r += nd.weights[j] * x;
          }
          break;
        case Op::Mul: {
          const auto& a = nodes_[nd.a].c;
          const auto& b = nodes_[nd.b].c;
          for (int i = 0; i <= k; ++i)
            if (!a[i].is_zero() && !b[k - i].is_zero()) r += a[i] * b[k - i];
          break;
        }
        case Op::Inv: {
          const auto& a = nodes_[nd.a].c;
          if (a[0].is_zero()) throw SolverError("series denominator vanishes at the seed");
          if (k == 0) {
            r = Rat(1) / a[0];
          } else {
            for (int i = 1; i <= k; ++i)
              if (!a[i].is_zero() && !nd.c[k - i].is_zero()) r += a[i] * nd.c[k - i];
            r = -r / a[0];
          }
          break;
        }
        case Op::Var:
          break;
      }
      coef(static_cast<int>(id), k) = r;
    }
  }

 private:
  enum class Op { Var, Const, Sum, Mul, Inv };
  struct Node {
    Op op = Op::Const;
    int a = -1, b = -1;
    std::vector<int> args;
    std::vector<Rat> weights;
    Rat value;
    std::vector<Rat> c;
  };
  static Node node(Op op, int a = -1, int b = -1) {
    Node n;
    n.op = op;
    n.a = a;
    n.b = b;
    return n;
  }
  static Node constant(const Rat& v) {
    Node n;
    n.value = v;
    return n;
  }

  int add(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }
  Rat& coef(int id, int k) {
    auto& c = nodes_[id].c;
    if (static_cast<int>(c.size()) <= k) c.resize(k + 1);
    return c[k];
  }
  int mul(int a, int b) { return add(node(Op::Mul, a, b)); }

  int power(int base, int e) {
    auto key = std::make_pair(base, e);
    auto it = pow_.find(key);
    if (it != pow_.end()) return it->second;
    int id = e == 1 ? base : mul(power(base, e - 1), base);
    pow_[key] = id;
    return id;
  }

  int inverse_var(int v) {
    auto it = inv_var_.find(v);
    if (it != inv_var_.end()) return it->second;
    int id = add(node(Op::Inv, var_node_.at(v)));
    inv_var_[v] = id;
    return id;
  }

  int monomial(const Monomial& m) {
    auto it = mono_.find(m);
    if (it != mono_.end()) return it->second;
    int acc = -1;
    for (int v = 0; v < ring_->nvars(); ++v) {
      int e = m[v];
      if (e == 0) continue;
      if (!var_node_.count(v)) throw SolverError("component depends on " + ring_->name(v));
      int f = e > 0 ? power(var_node_[v], e) : power(inverse_var(v), -e);
      acc = acc < 0 ? f : mul(acc, f);
    }
    if (acc < 0) acc = one();
    mono_[m] = acc;
    return acc;
  }

  int one() {
    if (one_ < 0) one_ = add(constant(Rat(1)));
    return one_;
  }

  int poly(const MPoly& p) {
    Node s = node(Op::Sum);
    for (const auto& t : p.terms()) {
      s.args.push_back(monomial(t.m));
      s.weights.push_back(t.c);
    }
    return add(std::move(s));
  }

  int compile(const RatFunc& f) {
    if (!f.ring()) return add(constant(f.is_zero() ? Rat(0) : f.constant_value()));
    int acc = poly(f.num());
    const auto& den = f.den();
    for (std::size_t i = 0; i < den.size(); ++i) {
      if (den[i] == 0) continue;
      auto it = factor_inv_.find(static_cast<int>(i));
      if (it == factor_inv_.end()) {
        int fnode = poly(MPoly(ring_, ring_->factors()[i]));
        it = factor_inv_.emplace(static_cast<int>(i), add(node(Op::Inv, fnode))).first;
      }
      acc = mul(acc, power(it->second, den[i]));
    }
    return acc;
  }

  RingPtr ring_;
  std::vector<Node> nodes_;
  std::vector<int> inputs_, outputs_;
  std::map<int, int> var_node_, inv_var_, factor_inv_;
  std::map<std::pair<int, int>, int> pow_;
  std::unordered_map<Monomial, int, MonomialHash> mono_;
  int one_ = -1;
};

}  // namespace

std::vector<Rat> seed_p0(const VectorField& vf, const SolverConfig& cfg) {
  const Rat& c = cfg.c;
  const Rat& t = cfg.t10;
  auto need = [](const std::optional<Rat>& x, const char* what) {
    if (!x) throw SolverError(std::string("seed_p0: missing ") + what);
    return *x;
  };
  std::vector<Rat> p;
  switch (cfg.n) {
    case 1:
      p = {t, -t * t / (Rat(3) * c), Rat(0)};
      break;
    case 2: {
      Rat k = need(cfg.k0, "k0");
      if (!(k * k * c == Rat(-1))) throw SolverError("seed_p0: k0^2 must equal -1/c");
      p = {t, k * t / Rat(4), k * t * t / Rat(4), Rat(0)};
      break;
    }
    case 3: {
      Rat u = need(cfg.t20, "t2,0");
      p = {t, u, t * u, t * t / (Rat(125) * c * u), Rat(0), Rat(3) * t * t * t / (Rat(125) * c * u),
           -t * t / (Rat(125) * c)};
      break;
    }
    case 4: {
      Rat k = need(cfg.k0, "k0");
      Rat u = need(cfg.t20, "t2,0");
      if (!(k * k == c)) throw SolverError("seed_p0: k0^2 must equal c");
      p = {t,
           u,
           t * u,
           -t / (Rat(36) * k),
           -t * t / (Rat(12) * k),
           Rat(0),
           -t * t / (Rat(1296) * c * u),
           -t * t * t / (Rat(36) * k)};
      break;
    }
    default:
      throw SolverError("seed_p0: unsupported n");
  }
  if (p.size() != vf.coords.size()) throw SolverError("seed_p0: coordinate count mismatch");
  auto pt = ring_point(vf, p);
  for (std::size_t i = 0; i < vf.comps.size(); ++i)
    if (!vf.comps[i].evaluate(pt).is_zero())
      throw SolverError("seed_p0: component " + vf.coords[i] + " does not vanish at p0");
  if (const RootRelation* rel = root_of(vf)) {
    Rat r = pt[rel->var];
    if (!(r * r == MPoly(vf.ring, rel->value).evaluate(pt)))
      throw SolverError("seed_p0: root relation fails at p0");
  }
  return p;
}

RatMat jacobian(const VectorField& vf, const std::vector<Rat>& p) {
  auto pt = ring_point(vf, p);
  const int m = static_cast<int>(vf.coords.size());
  RatMat j(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) j(r, c) = vf.comps[r].derivative(vf.coords[c]).evaluate(pt);
  return j;
}

FirstOrder first_order(const VectorField& vf, const std::vector<Rat>& p0, const SolverConfig& cfg) {
  const int m = static_cast<int>(vf.coords.size());
  // t_{n+2}-component: a t_{n+2,1} = -(n+2) t_{2,0} t_{n+2,1}
  FirstOrder fo;
  fo.a = Rat(-(cfg.n + 2)) * p0[coord_index(vf, "t2")];
  if (fo.a.is_zero()) throw SolverError("first_order: a = 0");
  RatMat j = jacobian(vf, p0);
  RatMat sys = RatMat::Identity(m, m) * fo.a - j;
  if (const RootRelation* rel = root_of(vf)) {
    // linearized r^2 = p(t)
    auto pt = ring_point(vf, p0);
    MPoly pv(vf.ring, rel->value);
    RatMat row(1, m);
    for (int c = 0; c < m; ++c) {
      int v = vf.ring->index(vf.coords[c]);
      row(0, c) = -pv.derivative(v).evaluate(pt);
      if (v == rel->var) row(0, c) += Rat(2) * pt[v];
    }
    RatMat stacked(m + 1, m);
    stacked << sys, row;
    sys = stacked;
  }
  Nullspace ns = nullspace(sys);
  if (ns.basis.size() != 1)
    throw SolverError("first_order: kernel has dimension " + std::to_string(ns.basis.size()));
  const RatVec& v = ns.basis.front();
  std::size_t f = coord_index(vf, cfg.free_coord);
  if (v(f).is_zero()) throw SolverError("first_order: free coordinate is forced to vanish");
  Rat s = cfg.free_value / v(f);
  for (int i = 0; i < m; ++i) fo.p1.push_back(v(i) * s);
  return fo;
}

SeriesSolution recurse(const VectorField& vf, const SolverConfig& cfg) {
  if (cfg.order < 1) throw SolverError("recurse: order must be positive");
  const int m = static_cast<int>(vf.coords.size());
  std::vector<Rat> p0 = seed_p0(vf, cfg);
  FirstOrder fo = first_order(vf, p0, cfg);
  RatMat j = jacobian(vf, p0);

  SeriesProgram prog(vf);
  std::vector<std::vector<Rat>> coef(m, std::vector<Rat>(cfg.order + 1));
  for (int i = 0; i < m; ++i) {
    coef[i][0] = p0[i];
    coef[i][1] = fo.p1[i];
    prog.set_input(i, 0, p0[i]);
    prog.set_input(i, 1, fo.p1[i]);
  }
  prog.eval(0);
  prog.eval(1);
  for (int i = 0; i < m; ++i)
    if (!(prog.output(i, 1) == fo.a * fo.p1[i]))
      throw SolverError("recurse: order 1 equation fails for " + vf.coords[i]);

  for (int k = 2; k <= cfg.order; ++k) {
    for (int i = 0; i < m; ++i) prog.set_input(i, k, Rat(0));
    prog.eval(k);
    RatMat rhs(m, 1);
    for (int i = 0; i < m; ++i) rhs(i, 0) = prog.output(i, k);
    RatMat mk = RatMat::Identity(m, m) * (fo.a * Rat(k)) - j;
    RatMat pk;
    try {
      pk = solve<Rat>(mk, rhs);
    } catch (const SingularMatrix&) {
      throw SolverError("recurse: singular system at order " + std::to_string(k));
    }
    for (int i = 0; i < m; ++i) {
      coef[i][k] = pk(i, 0);
      prog.set_input(i, k, pk(i, 0));
    }
    prog.eval(k);
  }

  SeriesSolution sol;
  sol.n = cfg.n;
  sol.a = fo.a;
  sol.coords = vf.coords;
  sol.order = cfg.order;
  for (int i = 0; i < m; ++i) sol.series.push_back(QSeries::integral(coef[i], cfg.order));
  return sol;
}

SeriesSolution solve_series(const SolverConfig& cfg) {
  return recurse(specialized_field(cfg), cfg);
}

QSeries evaluate_series(const RatFunc& f, const std::vector<std::string>& coords,
                        const std::vector<QSeries>& values) {
  long prec = QSeries().prec();
  for (const auto& v : values) prec = std::min(prec, v.prec());
  if (!f.ring()) return QSeries::constant(f.is_zero() ? Rat(0) : f.constant_value(), prec);
  const Ring& r = *f.ring();
  std::vector<const QSeries*> by_var(r.nvars(), nullptr);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (auto v = r.find(coords[i])) by_var[*v] = &values[i];
  auto eval_poly = [&](const MPoly& p) {
    QSeries acc = QSeries::constant(Rat(0), prec);
    for (const auto& t : p.terms()) {
      QSeries term = QSeries::constant(t.c, prec);
      for (int v = 0; v < r.nvars(); ++v) {
        if (t.m[v] == 0) continue;
        if (!by_var[v]) throw std::invalid_argument("evaluate_series: no value for " + r.name(v));
        term = term * by_var[v]->pow(t.m[v]);
      }
      acc += term;
    }
    return acc;
  };
  QSeries out = eval_poly(f.num());
  for (std::size_t i = 0; i < f.den().size(); ++i)
    if (f.den()[i] > 0)
      out = out * eval_poly(MPoly(f.ring(), r.factors()[i])).inverse().pow(f.den()[i]);
  return out;
}

namespace {

SeriesCheck first_nonzero(const QSeries& s, int order, const std::string& what) {
  SeriesCheck chk;
  for (int k = 0; k <= order; ++k)
    if (!s.coeff(k).is_zero()) {
      chk.ok = false;
      chk.first_failure = k;
      chk.detail = what + " at q^" + std::to_string(k);
      return chk;
    }
  return chk;
}

}  // namespace

SeriesCheck check_residual(const SeriesSolution& sol, const VectorField& vf) {
  for (std::size_t i = 0; i < sol.coords.size(); ++i) {
    QSeries lhs = sol.a * sol.series[i].q_derivative();
    QSeries rhs = evaluate_series(vf[sol.coords[i]], sol.coords, sol.series);
    SeriesCheck chk = first_nonzero(lhs - rhs, sol.order, "residual of " + sol.coords[i]);
    if (!chk.ok) return chk;
  }
  return {};
}

SeriesCheck check_relation(const SeriesSolution& sol, const VectorField& vf) {
  const RootRelation* rel = root_of(vf);
  if (!rel) return {};
  const std::string& rname = vf.ring->name(rel->var);
  QSeries r = sol[rname];
  QSeries p = evaluate_series(RatFunc(MPoly(vf.ring, rel->value)), sol.coords, sol.series);
  return first_nonzero(r * r - p, sol.order, "relation for " + rname);
}

std::vector<TableColumn> coefficient_table(const SeriesSolution& sol, int kmax) {
  if (kmax > sol.order) throw std::invalid_argument("coefficient_table: kmax beyond order");
  std::vector<TableColumn> out;
  auto column = [&](const std::string& label, const std::string& coord, const Rat& scale,
                    const Rat& qscale) {
    TableColumn col{label, {}};
    const QSeries& s = sol[coord];
    Rat w(1);
    for (int k = 0; k <= kmax; ++k) {
      col.values.push_back(scale * w * s.coeff(k));
      w = w * qscale;
    }
    out.push_back(std::move(col));
  };
  switch (sol.n) {
    case 2:
      column("10/6 t1(q/10)", "t1", Rat(10, 6), Rat(1, 10));
      column("10/4 t2(q/10)", "t2", Rat(10, 4), Rat(1, 10));
      column("10^4 t4(q/10)", "t4", Rat(10000), Rat(1, 10));
      break;
    case 4: {
      const std::vector<std::pair<std::string, Rat>> sc{
          {"1/20 t1", Rat(1, 20)}, {"1/216 t2", Rat(1, 216)}, {"1/14 t3", Rat(1, 14)},
          {"1/24 t4", Rat(1, 24)}, {"1/2 t5", Rat(1, 2)},     {"-6^6 t6", Rat(-46656)},
          {"-1/2 t7", Rat(-1, 2)}, {"18/7 t8", Rat(18, 7)}};
      for (std::size_t i = 0; i < sc.size(); ++i)
        column(sc[i].first, sol.coords[i], sc[i].second, Rat(1));
      break;
    }
    default:
      for (const auto& x : sol.coords) column(x, x, Rat(1), Rat(1));
  }
  return out;
}

SeriesCheck check_integrality(const SeriesSolution& sol) {
  SeriesCheck chk;
  if (sol.n == 3) {
    chk.detail = "no normalization known for n = 3";
    return chk;
  }
  for (const auto& col : coefficient_table(sol, sol.order))
    for (int k = 1; k <= sol.order; ++k)
      if (!col.values[k].is_integer()) {
        chk.ok = false;
        if (chk.first_failure < 0 || k < chk.first_failure) {
          chk.first_failure = k;
          chk.detail = col.label + " at q^" + std::to_string(k);
        }
      }
  return chk;
}

QSeries yukawa_series(const SeriesSolution& sol, const VectorField& vf) {
  if (vf.yukawa.empty()) throw std::invalid_argument("yukawa_series: no Yukawa function for n < 3");
  if (sol.n == 4)
    return Rat(1, 6) * evaluate_series(vf.yukawa.front().pow(2), sol.coords, sol.series);
  return evaluate_series(vf.yukawa.front(), sol.coords, sol.series);
}

}  // namespace gmcd
