#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oreaut::cli {

/// One invocation of the command-line tool, as plain option values.
struct JobConfig {
  std::string command;
  std::string field = "GF(2)";
  std::string f;
  std::string g;
  std::string nu;
  std::string xi;
  std::string rho;
  std::string pi;
  std::string q;
  std::string shape;
  std::string V;
  std::string witness = "off-image";
  std::uint64_t n = 0;
  unsigned degree_bound = 1;
  unsigned samples = 0;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t cap = 0;  // 0: OREAUT_CAP or the built-in default
  bool closure = false;

  /// Argument vector (without the program name) that parses back to this config.
  std::vector<std::string> to_args() const;
  bool operator==(const JobConfig&) const = default;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Parses args (without the program name) into a config; throws on malformed input.
JobConfig parse_args(const std::vector<std::string>& args);
/// Executes a parsed config: exit 0 on success, 1 on a domain or parse error,
/// 2 when an internal consistency check or oracle comparison fails.
RunResult run(const JobConfig& config);
/// parse_args + run, with usage errors mapped to exit code 1 and --help to 0.
RunResult run_args(const std::vector<std::string>& args);

std::uint64_t default_cap();

}  // namespace oreaut::cli
