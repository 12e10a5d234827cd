#include "logitgof/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <locale>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "logitgof/alternatives.hpp"
#include "logitgof/simulation.hpp"
#include "logitgof/table_io.hpp"
#include "logitgof/verification.hpp"

namespace logitgof {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::size_t parse_finite_n(const std::string& text) {
  const auto size = SampleSize::parse(text);
  if (size.is_asymptotic()) throw std::invalid_argument("--n must be a finite sample size here");
  return size.n();
}

// Sends `contents` to --out (atomically) or to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& contents) {
  if (cfg.output) {
    write_file_atomic(*cfg.output, contents);
  } else {
    out << contents;
  }
}

}  // namespace

std::vector<double> read_sample(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    text = trim(text.substr(0, text.find(',')));
    try {
      const double x = parse_double(text);
      if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
      values.push_back(x);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": not a finite number: '" +
                               std::string(text) + "'");
    }
  }
  return values;
}

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> levels;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    levels.push_back(parse_double(trim(rest.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return levels;
}

int cmd_test(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<double> values;
  try {
    if (cfg.input) {
      std::ifstream in(*cfg.input);
      if (!in) throw std::runtime_error("cannot read " + cfg.input->string());
      values = read_sample(in);
    } else {
      throw std::runtime_error("test needs an input file (--in)");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  TestResult result;
  try {
    result = evaluate(cfg.kind, Sample(std::move(values)));
  } catch (const DegenerateSample& e) {
    err << "error: DegenerateSample: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<EmpiricalDistribution> null_dist;
  CriticalValueTable table;
  try {
    null_dist = cfg.asymptotic_critvals
                    ? sample_limit(cfg.kind, {cfg.truncation, cfg.seed}, cfg.reps, cfg.workers)
                    : simulate_null_distribution(cfg.kind, result.n, cfg.reps, cfg.seed,
                                                 cfg.workers);
    table = table_from_distribution(*null_dist, cfg.levels);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto& dist = *null_dist;
  const double p_value = dist.upper_tail(result.statistic);

  const char* label = cfg.kind == StatisticKind::Location ? "nW_n" : "nV_n";
  out << "kind: " << to_string(cfg.kind) << '\n'
      << "n: " << std::to_string(result.n) << '\n'
      << "raw: " << format_double(result.raw) << '\n'
      << "statistic (" << label << "): " << format_double(result.statistic) << '\n'
      << "null distribution: " << (dist.meta().size.is_asymptotic() ? "asymptotic" : "finite n")
      << ", reps=" << std::to_string(dist.reps()) << ", seed=" << std::to_string(cfg.seed);
  if (dist.meta().size.is_asymptotic()) out << ", truncation=" << std::to_string(cfg.truncation);
  out << '\n' << "level,critval,decision\n";
  for (std::size_t i = 0; i < table.levels.size(); ++i) {
    out << format_double(table.levels[i]) << ',' << format_double(table.critvals[i]) << ','
        << (result.statistic > table.critvals[i] ? "rejected" : "not rejected") << '\n';
  }
  out << "p-value: " << format_double(p_value) << '\n';

  const auto reference = estimate_quantiles(dist, std::vector<double>{0.95}).front();
  const bool rejected = result.statistic > reference;
  out << "decision at 0.95: " << (rejected ? "rejected" : "not rejected") << '\n';
  return rejected ? kExitRejected : kExitOk;
}

int cmd_critvals(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.size.empty()) throw std::invalid_argument("critvals needs --n INT|asymptotic");
    const auto size = SampleSize::parse(cfg.size);
    const TableKey key{cfg.kind, size, cfg.levels, cfg.reps, cfg.truncation, cfg.seed};
    CriticalValueTable table;
    if (cfg.use_cache) {
      bool hit = false;
      table = TableCache(cfg.cache_dir).get_or_compute(key, cfg.workers, &hit);
      err << "cache " << (hit ? "hit" : "miss") << ": " << TableCache(cfg.cache_dir).path_for(key).string()
          << '\n';
    } else {
      table = critical_values(cfg.kind, size, cfg.levels, cfg.reps,
                              size.is_asymptotic() ? cfg.truncation : 0, cfg.seed, cfg.workers);
    }
    std::ostringstream csv;
    write_table_csv(csv, table);
    emit(cfg, out, csv.str());
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_power(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto alt = parse_alternative(cfg.alternative);
    if (!alt) throw std::invalid_argument("unknown alternative '" + cfg.alternative + "'");
    if (cfg.size.empty()) throw std::invalid_argument("power needs --n INT");
    const std::size_t n = parse_finite_n(cfg.size);
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw std::invalid_argument("--alpha must lie in (0, 1)");

    const std::vector<double> level = {1.0 - cfg.alpha};
    const auto size = cfg.asymptotic_critvals ? SampleSize::asymptotic() : SampleSize::finite(n);
    const TableKey key{cfg.kind, size, level, cfg.table_reps.value_or(cfg.reps), cfg.truncation,
                       cfg.seed};
    const auto table = cfg.use_cache
                           ? TableCache(cfg.cache_dir).get_or_compute(key, cfg.workers)
                           : critical_values(key.kind, key.size, key.levels, key.reps,
                                             size.is_asymptotic() ? cfg.truncation : 0, key.seed,
                                             cfg.workers);
    const auto result =
        empirical_power(cfg.kind, *alt, n, cfg.alpha, table, cfg.reps, cfg.seed, cfg.workers);

    std::ostringstream csv;
    csv.imbue(std::locale::classic());
    csv << "kind,alternative,n,alpha,power,reps,seed\n"
        << to_string(result.kind) << ',' << name(result.alternative) << ',' << result.n << ','
        << format_double(result.alpha) << ',' << format_double(result.power) << ','
        << result.reps << ',' << result.seed << '\n';
    emit(cfg, out, csv.str());
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_limitdist(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto dist = sample_limit(cfg.kind, {cfg.truncation, cfg.seed}, cfg.reps, cfg.workers);
    std::ostringstream csv;
    csv << "x,cdf\n";
    const auto draws = dist.draws();
    const double reps = static_cast<double>(draws.size());
    for (std::size_t k = 0; k < draws.size(); ++k) {
      csv << format_double(draws[k]) << ',' << format_double(static_cast<double>(k + 1) / reps)
          << '\n';
    }
    emit(cfg, out, csv.str());
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const RunConfig&, std::ostream& out, std::ostream& err) {
  try {
    bool all = true;
    for (const auto& check : run_verification()) {
      all = all && check.passed;
      out << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  (deviation "
          << std::setprecision(3) << check.deviation << ", tolerance " << check.tolerance << ")";
      if (!check.detail.empty()) out << "  " << check.detail;
      out << '\n';
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? kExitOk : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Test:
      return cmd_test(cfg, out, err);
    case Command::Critvals:
      return cmd_critvals(cfg, out, err);
    case Command::Power:
      return cmd_power(cfg, out, err);
    case Command::Limitdist:
      return cmd_limitdist(cfg, out, err);
    case Command::Verify:
      return cmd_verify(cfg, out, err);
  }
  return kExitUsage;
}

}  // namespace logitgof
