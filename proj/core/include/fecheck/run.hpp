#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fecheck {

enum class Command { verify, polarize, degree, rank, hod, suite };
enum class ReportFormat { text, json };

struct RunConfig {
  Command command = Command::suite;
  std::optional<std::string> input;  ///< scenario path for verify, expression otherwise
  std::uint64_t seed = 7;
  std::size_t samples = 10;  ///< pseudo-random samples added to the fixed ones
  ReportFormat report_format = ReportFormat::text;
  unsigned max_degree = 4;
  std::optional<unsigned> degree;  ///< polarize: declared degree, searched when absent
};

/// Exit codes returned by run().
inline constexpr int exit_ok = 0;        ///< every verdict matched its expectation
inline constexpr int exit_mismatch = 1;  ///< mismatch, inconsistency or absent result
inline constexpr int exit_usage = 2;     ///< bad configuration, parse or IO error

/// Executes one command and writes the report to `out`, diagnostics to
/// `err`. Output depends only on the configuration and input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

Command parse_command(const std::string& name);  ///< throws std::invalid_argument

}  // namespace fecheck
