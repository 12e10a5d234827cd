#pragma once

// CSV persistence for critical value tables and a content-addressed cache.
//
// Table schema (one row per level):
//   kind,size,level,critval,reps,truncation,seed
// Numbers are written in the shortest form that reads back bit-exactly,
// independent of the process locale.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "logitgof/simulation.hpp"

namespace logitgof {

/// Bumped whenever simulation output for fixed parameters could change.
inline constexpr std::string_view kCacheVersion = "logit-gof-1";

inline constexpr std::string_view kTableHeader = "kind,size,level,critval,reps,truncation,seed";

/// Locale-independent shortest round-trip formatting.
std::string format_double(double x);
/// Locale-independent parse of a whole field. Throws std::invalid_argument.
double parse_double(std::string_view text);

void write_table_csv(std::ostream& out, const CriticalValueTable& table);
/// Throws std::runtime_error on malformed content.
CriticalValueTable read_table_csv(std::istream& in);

/// Writes `contents` to `path` through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

struct TableKey {
  StatisticKind kind;
  SampleSize size;
  std::span<const double> levels;
  std::size_t reps;
  std::size_t truncation;  // ignored (stored as 0) for finite sizes
  std::uint64_t seed;

  /// Canonical text hashed into the cache file name; includes kCacheVersion.
  std::string canonical() const;
  /// "critvals-<16 hex digits>.csv"
  std::string file_name() const;
};

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const TableKey& key) const { return dir_ / key.file_name(); }

  /// Cached table, or nullopt if absent or not matching the key.
  std::optional<CriticalValueTable> load(const TableKey& key) const;
  void store(const TableKey& key, const CriticalValueTable& table) const;

  /// Cached table, computing and storing it on a miss. `hit` reports which.
  CriticalValueTable get_or_compute(const TableKey& key, unsigned workers, bool* hit = nullptr) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace logitgof
