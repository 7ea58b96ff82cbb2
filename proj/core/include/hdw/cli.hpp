#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hdw {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int usage = 2;
inline constexpr int resource = 3;
}  // namespace exit_code

/// Validated parameters for exactly one subcommand invocation.
struct RunConfig {
  std::string subcommand;  // enumerate|supersat|bounds|plan|construct|pierce|color

  long long n = 0;
  int k = 0;
  int r = 0;
  int q = 0;
  double s = 0;
  std::string eta = "0.4";  // exact decimal, parsed to a rational
  std::optional<std::string> t_override;
  double log_n = 0;  // bounds: ln n
  double s0 = 0;
  double f = 0;
  double m_bound = 0;       // bounds: independent-set count argument
  long long m_target = 0;   // color: point-count target
  bool coloring_variant = false;  // plan: use the k=q, u=q+1 parameters
  std::string in_path;      // pierce: construct artifact

  std::uint64_t seed = 0;
  std::uint64_t budget = 50'000'000;
  std::string mode = "strict";  // strict | formula-only
  std::string out;              // empty: stdout
  std::string csv_out;          // pierce: concurrency histogram
  bool no_timestamp = false;
};

/// Runs the subcommand, writes the JSON artifact (atomically when --out is
/// set), and returns the exit code: 0 ok, 1 verification failure in strict
/// mode, 2 usage error, 3 resource cap.
int dispatch(const RunConfig& config);

}  // namespace hdw
