#include "logitgof/table_io.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <locale>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include <unistd.h>

namespace logitgof {

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename Int>
Int parse_int(std::string_view text) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::runtime_error("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

void write_table_csv(std::ostream& out, const CriticalValueTable& table) {
  std::ostringstream text;
  text.imbue(std::locale::classic());
  text << kTableHeader << '\n';
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    text << to_string(table.kind) << ',' << table.size.to_string() << ','
         << format_double(table.levels[i]) << ',' << format_double(table.critvals[i]) << ','
         << table.reps << ',' << table.truncation << ',' << table.seed << '\n';
  }
  out << text.str();
}

CriticalValueTable read_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim_cr(line) != kTableHeader) {
    throw std::runtime_error("critical value table: missing or wrong header");
  }
  CriticalValueTable table;
  bool first = true;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    const auto text = trim_cr(line);
    if (text.empty()) continue;
    const auto f = split_csv(text);
    if (f.size() != 7) {
      throw std::runtime_error("critical value table: row " + std::to_string(row) +
                               " has " + std::to_string(f.size()) + " fields");
    }
    try {
      const auto kind = parse_kind(f[0]);
      const auto size = SampleSize::parse(std::string(f[1]));
      const auto reps = parse_int<std::size_t>(f[4]);
      const auto truncation = parse_int<std::size_t>(f[5]);
      const auto seed = parse_int<std::uint64_t>(f[6]);
      if (first) {
        table.kind = kind;
        table.size = size;
        table.reps = reps;
        table.truncation = truncation;
        table.seed = seed;
        first = false;
      } else if (kind != table.kind || !(size == table.size) || reps != table.reps ||
                 truncation != table.truncation || seed != table.seed) {
        throw std::runtime_error("rows disagree on table parameters");
      }
      table.levels.push_back(parse_double(f[2]));
      table.critvals.push_back(parse_double(f[3]));
    } catch (const std::exception& e) {
      throw std::runtime_error("critical value table: row " + std::to_string(row) + ": " +
                               e.what());
    }
  }
  if (first) throw std::runtime_error("critical value table: no rows");
  return table;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  static std::atomic<unsigned> counter{0};
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " +
                             ec.message());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string TableKey::canonical() const {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << kCacheVersion << '|' << to_string(kind) << '|' << size.to_string() << '|' << reps << '|'
    << (size.is_asymptotic() ? truncation : 0) << '|' << seed << '|';
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) s << ';';
    s << format_double(levels[i]);
  }
  return s.str();
}

std::string TableKey::file_name() const {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical())));
  return std::string("critvals-") + hex + ".csv";
}

std::optional<CriticalValueTable> TableCache::load(const TableKey& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    auto table = read_table_csv(in);
    const bool matches = table.kind == key.kind && table.size == key.size &&
                         table.reps == key.reps && table.seed == key.seed &&
                         table.truncation == (key.size.is_asymptotic() ? key.truncation : 0) &&
                         std::equal(table.levels.begin(), table.levels.end(), key.levels.begin(),
                                    key.levels.end());
    if (!matches) return std::nullopt;
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TableCache::store(const TableKey& key, const CriticalValueTable& table) const {
  std::ostringstream s;
  write_table_csv(s, table);
  write_file_atomic(path_for(key), s.str());
}

CriticalValueTable TableCache::get_or_compute(const TableKey& key, unsigned workers,
                                              bool* hit) const {
  if (auto cached = load(key)) {
    if (hit) *hit = true;
    return *cached;
  }
  if (hit) *hit = false;
  auto table = critical_values(key.kind, key.size, key.levels, key.reps,
                               key.size.is_asymptotic() ? key.truncation : 0, key.seed, workers);
  store(key, table);
  return table;
}

}  // namespace logitgof
