#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace klcalc::cli {

enum class Format { Json, Text, Latex, Csv };

/// Settings after merging defaults, the config file, KLCALC_CAP and command-line flags
/// (later sources win).
struct RunConfig {
  std::string verb;
  std::string algebra;
  std::optional<std::string> level;
  Format format = Format::Text;
  std::size_t cap = 200000;
  std::uint64_t seed = 1;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klcalc::cli
