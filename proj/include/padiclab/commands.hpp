#ifndef PADICLAB_COMMANDS_HPP
#define PADICLAB_COMMANDS_HPP

// The batch command layer behind the C API: JSON strings in, JSON (or
// plain text) out, with the exit-code convention 0 = success,
// 2 = verified negative verdict, 1 = failure to compute.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padiclab/errors.hpp"

namespace padiclab {

struct CommandConfig {
  int64_t prime = 5;       // used by commands whose input carries no p
  int precision = 16;
  uint64_t seed = 1;
  std::string format = "json";  // or "text"
  size_t dimension_cap = 256;   // simplicity cap; PADIC_LAB_CAP overrides
};

// Throws Error(invalid_input) on malformed config.
CommandConfig parse_config(const std::string& config_json);

struct CommandOutcome {
  int exit_code = 0;            // 0 | 1 | 2
  std::optional<errc> error;    // set when exit_code == 1
  std::string payload;          // rendered output (or error report)
};

const std::vector<std::string>& command_names();

CommandOutcome run_command(const std::string& name, const CommandConfig& config,
                           const std::string& input_json);

}  // namespace padiclab

#endif
