#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gjts {

/// Exit-code contract: 0 all requested checks passed, 1 a mathematical check
/// failed (the report carries witnesses), 2 input or usage error.
inline constexpr int kExitPassed = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  enum class Command { verify, decompose, left_unit, synthesize, example };
  enum class CheckSet { standard, identities, weak_comm, operator_relations, all };
  enum class Mode { automatic, exhaustive, sampled };
  enum class Output { table, json };

  Command command = Command::verify;
  std::string model;        // registry name; empty when reading a file
  std::vector<int> params;  // model parameters
  std::string input_path;   // system or circle JSON
  std::string tripotent_path;
  CheckSet checks = CheckSet::standard;
  Mode mode = Mode::automatic;
  std::uint64_t seed = 1;
  std::uint64_t sample_count = 10000;
  Output output = Output::table;
  std::string output_path;  // empty writes to stdout
};

/// Parses the command line. Returns nullopt when help was printed. Throws
/// UsageError on invalid flags or parameter combinations.
std::optional<RunConfig> parse_cli(int argc, const char* const* argv, std::ostream& out);

/// Executes one configuration; the report goes to `out` (or the configured
/// output path) and diagnostics to `err`. Identical configurations produce
/// byte-identical JSON reports.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gjts
