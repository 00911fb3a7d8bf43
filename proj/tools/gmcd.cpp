#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"

namespace {

using gmcd::cli::json;

struct Options {
  int n = 0;
  std::optional<int> order;
  std::string config;
  std::string format = "json";
  std::string out;
  std::string c;
};

void add_common(CLI::App* sub, Options& o, bool solver) {
  sub->add_option("--n", o.n, "Dimension n of the Dwork family")->required();
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Write output to this file");
  if (solver) {
    sub->add_option("--order", o.order, "Truncation order in q")->check(CLI::PositiveNumber);
    sub->add_option("--config", o.config, "JSON file with seeds and parameters");
  }
}

gmcd::SolverConfig solver_config(const Options& o) {
  gmcd::SolverConfig cfg = o.config.empty() ? gmcd::cli::default_config(o.n)
                                            : gmcd::cli::load_config_file(o.config, o.n);
  if (o.order) cfg.order = *o.order;
  return cfg;
}

std::optional<gmcd::Rat> parse_c(const Options& o) {
  if (o.c.empty()) return std::nullopt;
  try {
    return gmcd::Rat::parse(o.c);
  } catch (const std::exception&) {
    throw gmcd::cli::ConfigError("--c is not an exact rational: " + o.c);
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw gmcd::cli::ConfigError("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular vector fields of the Dwork family and their q-expansions"};
  app.require_subcommand(1);
  Options o;

  auto* pf = app.add_subcommand("pf", "Picard-Fuchs operator in z and in t1");
  add_common(pf, o, false);
  auto* gm = app.add_subcommand("gm", "Gauss-Manin connection matrix");
  add_common(gm, o, false);
  auto* om = app.add_subcommand("omega", "Intersection form matrix");
  add_common(om, o, false);
  om->add_option("--c", o.c, "Value of the constant c");
  auto* mo = app.add_subcommand("moduli", "Parametrization of the enhanced moduli space");
  add_common(mo, o, false);
  auto* de = app.add_subcommand("derive", "Modular vector field R and the matrix Y");
  add_common(de, o, false);
  de->add_option("--c", o.c, "Value of the constant c");
  auto* qe = app.add_subcommand("qexpand", "q-expansion of the solution of R");
  add_common(qe, o, true);
  auto* ve = app.add_subcommand("verify", "Run every consistency check");
  add_common(ve, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    json result;
    std::string csv;
    bool failed = false;
    if (pf->parsed()) {
      result = gmcd::cli::cmd_pf(o.n);
    } else if (gm->parsed()) {
      result = gmcd::cli::cmd_gm(o.n);
    } else if (om->parsed()) {
      result = gmcd::cli::cmd_omega(o.n, parse_c(o));
    } else if (mo->parsed()) {
      result = gmcd::cli::cmd_moduli(o.n);
    } else if (de->parsed()) {
      result = gmcd::cli::cmd_derive(o.n, parse_c(o));
    } else if (qe->parsed()) {
      result = gmcd::cli::cmd_qexpand(solver_config(o));
      csv = gmcd::cli::qexpand_csv(result);
    } else if (ve->parsed()) {
      result = gmcd::cli::cmd_verify(solver_config(o));
      csv = gmcd::cli::verify_csv(result);
      failed = !result.at("pass").get<bool>();
    }
    if (o.format == "csv") {
      emit(o, csv.empty() ? gmcd::cli::flat_csv(result) : csv);
    } else {
      emit(o, result.dump(2) + "\n");
    }
    return failed ? 1 : 0;
  } catch (const gmcd::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gmcd::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
