#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gmcd/intersection.hpp"
#include "gmcd/modularforms.hpp"
#include "gmcd/picardfuchs.hpp"

namespace gmcd::cli {

namespace {

// Known 4-point function coefficients for n = 4, q^0..q^10.
const std::vector<std::string> kKnownYukawa{
    "6",
    "120960",
    "4136832000",
    "148146924602880",
    "5420219848911544320",
    "200623934537137119778560",
    "7478994517395643259712737280",
    "280135301818357004749298146851840",
    "10528167289356385699173014219946393600",
    "396658819202496234945300681212382224722560",
    "14972930462574202465673643937107499992165427200"};

Rat rational(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (v.is_string()) {
    try {
      return Rat::parse(v.get<std::string>());
    } catch (const std::exception&) {
      throw ConfigError("config: " + key + " is not an exact rational: " + v.get<std::string>());
    }
  }
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw ConfigError("config: " + key + " must be an integer or a string rational such as \"-1/64\"");
}

int integer(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError("config: " + key + " must be an integer");
  return v.get<int>();
}

json check_json(const std::string& name, const std::string& range, bool pass,
                std::optional<long> first_failure, const std::string& detail = {}) {
  json j{{"check", name}, {"range", range}, {"pass", pass}, {"first_failure", nullptr}};
  if (first_failure) j["first_failure"] = *first_failure;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

json check_json(const CheckReport& r) {
  return check_json(r.check, r.range, r.pass, r.first_failure, r.detail);
}

json series_check_json(const std::string& name, int order, const SeriesCheck& s) {
  std::optional<long> ff;
  if (s.first_failure >= 0) ff = s.first_failure;
  return check_json(name, "0<=k<=" + std::to_string(order), s.ok, ff, s.detail);
}

std::string range_to(int k) { return "0<=k<=" + std::to_string(k); }

json rats(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json rat_matrix_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

void require_layout(int n) {
  if (n < 1 || n > 4) throw ConfigError("n must be between 1 and 4 for this command");
}

}  // namespace

SolverConfig parse_config(const json& j, std::optional<int> n) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  int nn = j.contains("n") ? integer(j, "n") : n.value_or(0);
  if (n && nn != *n) throw ConfigError("config: n does not match the requested n");
  if (nn < 1 || nn > 4) throw ConfigError("config: n must be between 1 and 4");
  SolverConfig cfg = SolverConfig::defaults(nn);
  for (const auto& [key, value] : j.items()) {
    if (key == "n") continue;
    if (key == "c") cfg.c = rational(j, key);
    else if (key == "k0") cfg.k0 = rational(j, key);
    else if (key == "t10") cfg.t10 = rational(j, key);
    else if (key == "t20") cfg.t20 = rational(j, key);
    else if (key == "free") {
      if (!value.is_string()) throw ConfigError("config: free must be a coordinate name");
      cfg.free_coord = value.get<std::string>();
    } else if (key == "free_value") cfg.free_value = rational(j, key);
    else if (key == "order") {
      cfg.order = integer(j, key);
      if (cfg.order < 1) throw ConfigError("config: order must be positive");
    } else {
      throw ConfigError("config: unknown key " + key);
    }
  }
  // a given k0 fixes c unless c is also given
  if (cfg.k0 && !j.contains("c")) {
    if (nn == 2) cfg.c = Rat(-1) / (*cfg.k0 * *cfg.k0);
    if (nn == 4) cfg.c = *cfg.k0 * *cfg.k0;
  }
  return cfg;
}

json config_to_json(const SolverConfig& cfg) {
  json j{{"n", cfg.n},
         {"c", cfg.c.str()},
         {"t10", cfg.t10.str()},
         {"free", cfg.free_coord},
         {"free_value", cfg.free_value.str()},
         {"order", cfg.order}};
  if (cfg.k0) j["k0"] = cfg.k0->str();
  if (cfg.t20) j["t20"] = cfg.t20->str();
  return j;
}

SolverConfig load_config_file(const std::string& path, std::optional<int> n) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed config " + path + ": " + e.what());
  }
  return parse_config(j, n);
}

SolverConfig default_config(int n) {
  if (const char* dir = std::getenv("GMCD_DEFAULTS"); dir && *dir) {
    std::string path = std::string(dir) + "/n" + std::to_string(n) + ".json";
    std::ifstream probe(path);
    if (probe) return load_config_file(path, n);
  }
  if (n < 1 || n > 4) throw ConfigError("no defaults for n = " + std::to_string(n));
  return SolverConfig::defaults(n);
}

json ring_json(const RingPtr& ring) {
  json j{{"variables", ring->names()}, {"relations", json::array()}, {"factors", json::array()}};
  for (const auto& rel : ring->relations())
    j["relations"].push_back(ring->name(rel.var) + "^2 = " + MPoly(ring, rel.value).str());
  for (const auto& f : ring->factors()) j["factors"].push_back(MPoly(ring, f).str());
  return j;
}

json matrix_json(const SymMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json cmd_pf(int n) {
  if (n < 1) throw ConfigError("n must be positive");
  DOperator pt = pf_t1(n);
  json red = json::array();
  for (const auto& p : pf_t1_reduction(n)) red.push_back(p.str());
  return {{"n", n},
          {"theta_form", pf_theta(n).str()},
          {"theta_factored", pf_theta_factored(n)},
          {"z_form", theta_to_d(pf_theta(n)).str("d/dz")},
          {"t1_form", pt.str("d/dt1")},
          {"t1_reduction", red},
          {"companion_matrix", matrix_json(companion_matrix(n))}};
}

json cmd_gm(int n) {
  if (n < 1) throw ConfigError("n must be positive");
  ConnectionMatrix gm = gm_matrix(n);
  json comps;
  for (std::size_t k = 0; k < gm.coords.size(); ++k) comps[gm.coords[k]] = matrix_json(gm.comps[k]);
  return {{"n", n}, {"ring", ring_json(t_ring(n))}, {"components", comps},
          {"flat", all_zero(curvature(gm, "t1", tname(n + 2)))}};
}

json cmd_omega(int n, const std::optional<Rat>& c) {
  if (n < 1) throw ConfigError("n must be positive");
  SymMat om = omega_matrix(n, c);
  bool ok = check_compatibility(om, gm_matrix(n)).ok;
  return {{"n", n}, {"ring", ring_json(t_ring(n))}, {"omega", matrix_json(om)}, {"compatible", ok}};
}

json cmd_moduli(int n) {
  require_layout(n);
  TcheckSolution sol = solve_tcheck(n);
  json layout = json::array();
  for (const auto& row : sol.layout.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.name());
    layout.push_back(r);
  }
  json assign;
  for (const auto& [k, v] : sol.assignments) assign["tc" + std::to_string(k)] = v.str();
  json out{{"n", n},
           {"dim_T", dim_T(n)},
           {"coordinates", sol.layout.coordinates()},
           {"layout", layout},
           {"ring", ring_json(sol.ring)},
           {"assignments", assign},
           {"phi", rat_matrix_json(phi(n))}};
  if (sol.layout.promoted)
    out["promoted"] = {{"dependent", "tc" + std::to_string(sol.layout.promoted->first)},
                       {"coordinate", tname(sol.layout.promoted->second)}};
  return out;
}

json cmd_derive(int n, const std::optional<Rat>& c) {
  require_layout(n);
  TcheckSolution ts = solve_tcheck(n);
  VectorField vf = derive_R(n, ts, gm_matrix(n));
  TheoremReport rep = check_theorem_constraints(vf, ts);
  if (c) vf = specialize(vf, *c);
  json comps;
  for (std::size_t i = 0; i < vf.coords.size(); ++i) comps[vf.coords[i]] = vf.comps[i].str();
  json yk = json::array();
  for (const auto& y : vf.yukawa) yk.push_back(y.str());
  return {{"n", n},
          {"ring", ring_json(vf.ring)},
          {"components", comps},
          {"y", matrix_json(vf.y)},
          {"yukawa", yk},
          {"constraints", {{"shape", rep.shape}, {"symplectic", rep.symplectic}, {"tangent", rep.tangent}}}};
}

json cmd_qexpand(const SolverConfig& cfg) {
  VectorField vf = specialized_field(cfg);
  SeriesSolution sol = recurse(vf, cfg);
  json cols = json::array();
  for (const auto& col : coefficient_table(sol, sol.order))
    cols.push_back({{"label", col.label}, {"values", rats(col.values)}});
  json series;
  for (std::size_t i = 0; i < sol.coords.size(); ++i) series[sol.coords[i]] = rats(sol.series[i].coeffs(sol.order));
  json out{{"n", cfg.n}, {"a", sol.a.str()}, {"order", sol.order}, {"config", config_to_json(cfg)},
           {"columns", cols}, {"series", series}};
  if (cfg.n >= 3) out["yukawa"] = rats(yukawa_series(sol, vf).coeffs(sol.order));
  return out;
}

json cmd_verify(const SolverConfig& cfg) {
  const int n = cfg.n;
  json checks = json::array();

  TcheckSolution ts = solve_tcheck(n);
  checks.push_back(check_json("period_relation", "symbolic",
                              all_zero(period_residual(ts.s, ts.omega)), std::nullopt));
  ConnectionMatrix gm = gm_matrix(n);
  checks.push_back(check_json("omega_compatibility", "symbolic",
                              check_compatibility(omega_matrix(n), gm).ok, std::nullopt));
  checks.push_back(check_json("flatness", "symbolic", all_zero(curvature(gm, "t1", tname(n + 2))),
                              std::nullopt));
  VectorField sym = derive_R(n, ts, gm);
  TheoremReport rep = check_theorem_constraints(sym, ts);
  checks.push_back(check_json("y_shape", "symbolic", rep.shape, std::nullopt));
  checks.push_back(check_json("y_phi_symplectic", "symbolic", rep.symplectic, std::nullopt));
  checks.push_back(check_json("tangency", "symbolic", rep.tangent, std::nullopt));

  VectorField vf = specialize(sym, cfg.c);
  std::optional<SeriesSolution> sol;
  try {
    sol = recurse(vf, cfg);
    checks.push_back(check_json("per_order_nonsingular", "2<=k<=" + std::to_string(cfg.order), true,
                                std::nullopt));
  } catch (const SolverError& e) {
    checks.push_back(check_json("per_order_nonsingular", "2<=k<=" + std::to_string(cfg.order), false,
                                std::nullopt, e.what()));
  }
  if (sol) {
    checks.push_back(series_check_json("ode_residual", sol->order, check_residual(*sol, vf)));
    checks.push_back(series_check_json("root_relation", sol->order, check_relation(*sol, vf)));
    if (n != 3)
      checks.push_back(series_check_json("integrality", sol->order, check_integrality(*sol)));
    if (n == 1) {
      for (const auto& r : identity_suite_n1(*sol)) checks.push_back(check_json(r));
      checks.push_back(check_json(check_prop81((*sol)["t1"], sol->order)));
    }
    if (n == 2) {
      for (const auto& r : identity_suite_n2(*sol)) checks.push_back(check_json(r));
      checks.push_back(check_json(check_odd_divisors((*sol)["t1"], sol->order)));
      checks.push_back(check_json(check_divisor_difference((*sol)["t2"], sol->order)));
    }
    if (n == 4) {
      QSeries y = yukawa_series(*sol, vf);
      int kmax = std::min<int>(sol->order, static_cast<int>(kKnownYukawa.size()) - 1);
      std::optional<long> ff;
      for (int k = 0; k <= kmax && !ff; ++k)
        if (!(y.coeff(k) == Rat::parse(kKnownYukawa[k]))) ff = k;
      checks.push_back(check_json("yukawa_4_point_function", range_to(kmax), !ff, ff));
    }
  }
  bool pass = true;
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  return {{"n", n}, {"config", config_to_json(cfg)}, {"checks", checks}, {"pass", pass}};
}

std::string qexpand_csv(const json& table) {
  std::ostringstream os;
  const json& cols = table.at("columns");
  const int order = table.at("order").get<int>();
  if (table.at("n").get<int>() == 4) {
    // one row per normalized coordinate
    os << "series";
    for (int k = 0; k <= order; ++k) os << ",q^" << k;
    os << "\n";
    for (const auto& c : cols) {
      os << c.at("label").get<std::string>();
      for (const auto& v : c.at("values")) os << "," << v.get<std::string>();
      os << "\n";
    }
  } else {
    os << "k";
    for (const auto& c : cols) os << "," << c.at("label").get<std::string>();
    os << "\n";
    for (int k = 0; k <= order; ++k) {
      os << "q^" << k;
      for (const auto& c : cols) os << "," << c.at("values").at(k).get<std::string>();
      os << "\n";
    }
  }
  return os.str();
}

std::string verify_csv(const json& report) {
  std::ostringstream os;
  os << "check,range,pass,first_failure\n";
  for (const auto& c : report.at("checks")) {
    os << c.at("check").get<std::string>() << "," << c.at("range").get<std::string>() << ","
       << (c.at("pass").get<bool>() ? "true" : "false") << ",";
    if (!c.at("first_failure").is_null()) os << c.at("first_failure").get<long>();
    os << "\n";
  }
  return os.str();
}

namespace {

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    std::string v = j.is_string() ? j.get<std::string>() : j.dump();
    bool quote = v.find_first_of(",\"") != std::string::npos;
    if (quote) {
      std::string q;
      for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      v = "\"" + q + "\"";
    }
    os << path << "," << v << "\n";
  }
}

}  // namespace

std::string flat_csv(const json& j) {
  std::ostringstream os;
  os << "key,value\n";
  flatten(j, "", os);
  return os.str();
}

}  // namespace gmcd::cli
