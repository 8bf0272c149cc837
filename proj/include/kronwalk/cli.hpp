#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kronwalk/walk.hpp"

namespace kronwalk::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNumericalFailure = 3,
};

enum class Mode { full, reduced, automatic };

/// Graphs above this many vertices run reduced when mode is automatic.
inline constexpr std::uint64_t kAutoReducedAbove = 4096;

struct RunConfig {
  std::uint32_t m = 0;
  std::uint32_t order = 1;
  std::optional<double> gamma;         // default: default_gamma(m, order)
  std::optional<Vertex> marked;        // default 0
  std::optional<double> t_max;         // default 1.5 * pi sqrt(M^j) / 2
  int samples = 512;
  Mode mode = Mode::automatic;
  std::string csv_path;   // empty: not written
  std::string json_path;  // empty: not written
};

struct RunOutcome {
  SimulationResult result;
  std::string gamma_formula;
  std::string mode;  // "full" or "reduced"
};

/// Rate used when --gamma is absent: critical_gamma, except the practical
/// 1/(M-1)^3 for j = 3. Formula label returned alongside.
std::pair<double, std::string> default_gamma(std::uint32_t m, std::uint32_t order);

/// Runs one simulation and writes the requested files.
RunOutcome run_simulation(const RunConfig& config);

struct VerifyCheck {
  std::string suite;
  std::string name;
  std::string detail;
  bool passed = false;
};

/// suite in {srg, census, quotient, diameter, all}; InvalidArgument otherwise.
std::vector<VerifyCheck> run_verification(std::string_view suite);

/// Entry point behind the kronwalk executable. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kronwalk::cli
