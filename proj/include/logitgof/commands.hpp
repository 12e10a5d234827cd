#pragma once

// Command implementations behind the logit-gof executable. Each command
// writes its report to `out`, diagnostics to `err`, and returns the process
// exit code.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "logitgof/limit_law.hpp"
#include "logitgof/quantile_stats.hpp"

namespace logitgof {

enum class Command { Test, Critvals, Power, Limitdist, Verify };

inline constexpr std::uint64_t kDefaultSeed = 20100514;
inline constexpr std::size_t kDefaultReps = 20000;

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;  // `test` only
inline constexpr int kExitFailure = 1;   // `verify` only
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Verify;
  StatisticKind kind = StatisticKind::LocationScale;
  std::string size;  // "--n": an integer, or "asymptotic" for critvals
  std::size_t reps = kDefaultReps;
  std::optional<std::size_t> table_reps;  // power: reps for the critical value table
  std::uint64_t seed = kDefaultSeed;
  std::size_t truncation = kDefaultTruncation;
  double alpha = 0.10;
  std::string alternative;
  std::vector<double> levels = {0.85, 0.90, 0.95, 0.99};
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> output;
  std::filesystem::path cache_dir = ".logit-gof-cache";
  bool use_cache = true;
  bool asymptotic_critvals = false;
  unsigned workers = 0;
};

/// One number per line; blank lines and lines starting with '#' are skipped,
/// and only the first comma-separated field of a line is read.
/// Throws std::runtime_error naming the offending line.
std::vector<double> read_sample(std::istream& in);

/// Comma-separated levels, e.g. "0.85,0.9". Throws std::invalid_argument.
std::vector<double> parse_levels(const std::string& text);

int cmd_test(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_critvals(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_power(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_limitdist(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace logitgof
