#pragma once

#include <map>
#include <string>
#include <vector>

namespace qmlab::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Param {
  std::string name;
  std::string default_value;
  std::string description;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> metadata;
  bool self_check_failed = false;
};

using ParamMap = std::map<std::string, std::string>;

struct Scenario {
  std::string name;
  std::string description;
  std::string formula;  // relation reproduced, echoed in output headers
  std::vector<Param> params;
  Table (*run)(const ParamMap&);
};

const std::vector<Scenario>& registry();
const Scenario* find_scenario(const std::string& name);

// Defaults merged with overrides; throws std::invalid_argument on unknown keys.
ParamMap resolve_params(const Scenario& scenario, const ParamMap& overrides);

std::string render_csv(const Scenario& scenario, const ParamMap& params, const Table& table);
std::string render_json(const Scenario& scenario, const ParamMap& params, const Table& table);

// Flat key-value config with one [scenario] section per block.
ParamMap parse_config(const std::string& text, const std::string& scenario_name);

// Exit codes: 0 ok, 2 usage/schema, 3 self-check tolerance failure,
// 4 unwritable output path.
int run_scenario(const std::string& name, const ParamMap& overrides,
                 const std::string& output_path, const std::string& format,
                 std::string* rendered = nullptr);

std::string usage_text();
std::string list_text();

}  // namespace qmlab::cli
