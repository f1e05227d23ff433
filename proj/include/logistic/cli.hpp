#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "logistic/output.hpp"

namespace logistic::cli {

enum class Subcommand { ode, map3, map4, compare, figure, rng };
enum class OutputFormat { csv, json, svg };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMath = 3;

struct RunConfig {
  Subcommand subcommand = Subcommand::ode;
  std::optional<double> r;
  std::optional<double> x0;
  std::vector<double> gammas;
  std::optional<std::uint64_t> steps;
  std::optional<double> t_end;
  std::optional<double> dt;
  std::optional<unsigned> bits;
  std::optional<double> threshold;
  std::vector<std::string> forms;
  std::optional<std::uint64_t> count;
  std::optional<std::uint64_t> burn_in;
  int figure = 0;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: standard output
};

/// Parameter values from the figure captions.
namespace presets {
inline constexpr double kFigure1R = 1.7;
inline constexpr double kFigure1X0 = 0.11;
inline const std::vector<double> kFigure1Gammas = {0.14, 0.15, 0.17, 0.25};
inline constexpr double kFigure1TEnd = 10.0;
inline constexpr double kFigure1Dt = 0.05;

inline constexpr double kFigure2R = -2.0;
inline constexpr double kFigure2X0 = 0.9;
inline constexpr std::uint64_t kFigure2Steps = 60;
inline constexpr unsigned kFigure2Bits = 53;
inline constexpr double kFigure2Threshold = 0.01;

inline constexpr double kFigure3R = 1.73;
inline constexpr double kFigure3X0 = 0.333;
inline const std::vector<double> kFigure3Gammas = {0.5, 1.0, 2.0, 5.0, 10.0};
inline constexpr std::uint64_t kFigure3Steps = 50;
}  // namespace presets

/// Parses argv-style arguments (without the program name). Throws UsageError
/// on unknown subcommands, unknown flags or malformed values. Returns
/// nullopt after printing help to `out` when --help was requested.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args,
                                    std::ostream& out);

/// Builds the artifact a configuration describes without writing it.
output::Artifact build_artifact(const RunConfig& config, std::ostream& err);

/// Executes a configuration: writes the artifact to config.output_path or
/// `out`, diagnostics to `err`, and returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-status mapping for every failure.
int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

}  // namespace logistic::cli
