#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace orbihall::cli {

enum class Command { info, riemann_roch, spectrum, transport, validate, pullback_demo };

/// Throws InvalidInput for an unknown command name.
Command command_from_string(const std::string& name);
std::string to_string(Command c);

struct JobSpec {
  Command command = Command::info;
  std::string input_path;
  std::optional<std::string> output_path;
  std::map<std::string, std::string> options;  // e.g. "convention", "cap", "seed", "csv"
};

/// Exit statuses: 0 success, 1 invalid input, 2 numerical failure,
/// 3 hypothesis violation.
enum ExitStatus : int { kSuccess = 0, kInvalid = 1, kNumerical = 2, kHypothesis = 3 };

/// Runs one job. The report goes to the output path, or to `out` when none is
/// given; diagnostics go to `err` as {"error": code, "detail": text}. Nothing
/// is written to the output path unless the job succeeds.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace orbihall::cli
