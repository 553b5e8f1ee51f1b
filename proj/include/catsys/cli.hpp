#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catsys/root_system.hpp"
#include "catsys/stability.hpp"

namespace catsys::cli {

inline constexpr int kSchemaVersion = 1;

enum class Command { Roots, Identity, Volume, Systole, Inequality, Sample, Optimize, TiltGraph, Milnor, Correspond };
enum class OutputFormat { Human, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitPropertyViolation = 2;

std::string_view command_name(Command c);
Command parse_command(std::string_view name);

struct RunConfig {
  Command command = Command::Roots;
  std::optional<AdeType> ade;
  std::optional<CentralCharge> charge;
  std::optional<std::vector<Complex>> points;
  std::optional<std::vector<Complex>> poly;
  std::optional<std::vector<std::size_t>> ordering;
  std::uint64_t seed = 0;
  std::size_t count = 10000;
  std::size_t restarts = 20;
  std::size_t depth = 4;
  bool correspond = false;
  OutputFormat output = OutputFormat::Human;
  std::optional<std::string> out_file;

  /// Throws ValidationError when a field the command needs is missing.
  void validate() const;
};

/// Result of one command: the JSON document (schema_version, command, input
/// echo, outputs), plus whatever the human/csv renderings need.
struct Report {
  nlohmann::json json;
  bool property_ok = true;
  std::string human;
  std::string csv;  // empty when the command has no tabular output
};

Report build_report(const RunConfig& cfg);

/// Writes the report in cfg.output format to `out` (or cfg.out_file) and
/// returns the exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parse, validate, run. Never throws.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catsys::cli
