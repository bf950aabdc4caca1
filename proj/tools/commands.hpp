#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypergen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct Environment {
  /// Value of HYPERGEN_N_MAX, if set.
  std::optional<std::string> n_max_override;

  static Environment from_process();
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one invocation. `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args, const Environment& env = {});

/// CSV body of `regions N` (header included).
std::string regions_csv(std::int64_t population);

}  // namespace hypergen::cli
