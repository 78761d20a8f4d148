#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qmlab/scenarios.hpp"

using namespace qmlab::cli;

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    std::cerr << usage_text();
    return 2;
  }
  if (args[0] == "--list" || args[0] == "list") {
    std::cout << list_text();
    return 0;
  }
  if (args[0] == "--help" || args[0] == "-h") {
    std::cout << usage_text();
    return 0;
  }

  const std::string scenario = args[0];
  std::string output, format = "csv", config_path;
  ParamMap overrides;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) {
      std::cerr << "expected --key value, got: " << a << "\n" << usage_text();
      return 2;
    }
    if (i + 1 >= args.size()) {
      std::cerr << "missing value for " << a << "\n" << usage_text();
      return 2;
    }
    const std::string key = a.substr(2);
    const std::string value = args[++i];
    if (key == "output")
      output = value;
    else if (key == "format")
      format = value;
    else if (key == "config")
      config_path = value;
    else
      overrides[key] = value;
  }

  ParamMap merged;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "cannot read config file " << config_path << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      merged = parse_config(buf.str(), scenario);
    } catch (const std::exception& err) {
      std::cerr << err.what() << "\n";
      return 2;
    }
  }
  // command-line flags override config values
  for (const auto& [k, v] : overrides) merged[k] = v;

  return run_scenario(scenario, merged, output, format);
}
