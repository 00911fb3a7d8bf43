#ifndef GMCD_TOOLS_COMMANDS_HPP
#define GMCD_TOOLS_COMMANDS_HPP

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "gmcd/qsolver.hpp"

namespace gmcd::cli {

using nlohmann::json;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Flat JSON config; rationals are strings such as "-1/64".
SolverConfig parse_config(const json& j, std::optional<int> n = std::nullopt);
json config_to_json(const SolverConfig& cfg);
SolverConfig load_config_file(const std::string& path, std::optional<int> n = std::nullopt);
// $GMCD_DEFAULTS/n<k>.json when the variable is set, built-in values otherwise.
SolverConfig default_config(int n);

json ring_json(const RingPtr& ring);
json matrix_json(const SymMat& m);

json cmd_pf(int n);
json cmd_gm(int n);
json cmd_omega(int n, const std::optional<Rat>& c = std::nullopt);
json cmd_moduli(int n);
json cmd_derive(int n, const std::optional<Rat>& c = std::nullopt);
json cmd_qexpand(const SolverConfig& cfg);
json cmd_verify(const SolverConfig& cfg);  // "pass" summarizes every check

std::string qexpand_csv(const json& table);
std::string verify_csv(const json& report);
// Generic flattening: one "path,value" line per leaf.
std::string flat_csv(const json& j);

}  // namespace gmcd::cli

#endif  // GMCD_TOOLS_COMMANDS_HPP
