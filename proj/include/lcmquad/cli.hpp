#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcmquad/equidist.hpp"
#include "lcmquad/poly.hpp"

namespace lcmquad::cli {

enum class Command { constant, lcm, table, roots, discrepancy, reducible };
enum class Format { csv, json, text };

struct RunConfig {
  Command command = Command::constant;
  std::optional<QuadPoly> poly;
  std::vector<u64> ns;
  std::optional<u64> x;
  std::optional<Progression> progression;
  std::optional<Format> format;  // unset selects the command's default
  unsigned workers = 1;
  std::string out;  // empty writes to the given stream
  bool exact = false;
  bool oracle_check = false;
};

// Thrown for malformed or missing flags; flag() names the offending option.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string flag, const std::string& message)
      : std::runtime_error(message), flag_(std::move(flag)) {}
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

std::optional<Command> parse_command(std::string_view name);
std::optional<Format> parse_format(std::string_view name);
std::vector<u64> parse_n_list(std::string_view text);
Progression parse_progression(std::string_view text);

// Throws UsageError when a command-specific field is missing.
void validate(const RunConfig& config);

// 0 on success, 1 on usage errors, 2 on domain errors. Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lcmquad::cli
