// logit-gof: weighted quantile correlation goodness-of-fit tests for the
// logistic location (w) and location-scale (v) families.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "logitgof/commands.hpp"

namespace {

void add_common(CLI::App* sub, logitgof::RunConfig& cfg, std::string& kind) {
  sub->add_option("--kind", kind, "statistic: v (location-scale) or w (location)")
      ->check(CLI::IsMember({"v", "w", "V", "W"}));
  sub->add_option("--reps", cfg.reps, "Monte Carlo replications")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "master 64-bit seed");
  sub->add_option("--threads", cfg.workers, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  logitgof::RunConfig cfg;
  std::string kind = "v";
  std::string levels;

  CLI::App app{"Weighted quantile correlation goodness-of-fit tests for the logistic family"};
  app.require_subcommand(1);

  auto* test = app.add_subcommand("test", "test a sample; exit 0 = not rejected at 0.95, 1 = rejected");
  add_common(test, cfg, kind);
  test->add_option("--in", cfg.input, "sample file, one number per line")->required();
  test->add_option("--levels", levels, "comma-separated confidence levels");
  test->add_flag("--asymptotic", cfg.asymptotic_critvals,
                 "use the asymptotic null law instead of the finite-n one");
  test->add_option("--truncation", cfg.truncation, "series terms for the asymptotic law");

  auto* critvals = app.add_subcommand("critvals", "critical value table as CSV");
  add_common(critvals, cfg, kind);
  critvals->add_option("--n", cfg.size, "sample size, or 'asymptotic'")->required();
  critvals->add_option("--truncation", cfg.truncation, "series terms for the asymptotic law");
  critvals->add_option("--levels", levels, "comma-separated confidence levels");
  critvals->add_option("--out", cfg.output, "output CSV (default: stdout)");
  critvals->add_option("--cache-dir", cfg.cache_dir, "critical value cache directory");
  critvals->add_flag("!--no-cache", cfg.use_cache, "always recompute");

  auto* power = app.add_subcommand("power", "empirical power against an alternative");
  add_common(power, cfg, kind);
  power->add_option("--n", cfg.size, "sample size")->required();
  power->add_option("--alt", cfg.alternative, "alternative distribution name")->required();
  power->add_option("--alpha", cfg.alpha, "significance level");
  power->add_option("--table-reps", cfg.table_reps, "replications for the critical value (default: --reps)");
  power->add_option("--truncation", cfg.truncation, "series terms for --asymptotic-critvals");
  power->add_flag("--asymptotic-critvals", cfg.asymptotic_critvals,
                  "use asymptotic instead of finite-n critical values");
  power->add_option("--out", cfg.output, "output CSV (default: stdout)");
  power->add_option("--cache-dir", cfg.cache_dir, "critical value cache directory");
  power->add_flag("!--no-cache", cfg.use_cache, "always recompute the critical value");

  auto* limitdist = app.add_subcommand("limitdist", "empirical CDF of the limit law as CSV");
  add_common(limitdist, cfg, kind);
  limitdist->add_option("--truncation", cfg.truncation, "series terms");
  limitdist->add_option("--out", cfg.output, "output CSV (default: stdout)");

  app.add_subcommand("verify", "numeric checks of the eigensystem and series coefficients");

  try {
    app.parse(argc, argv);
    cfg.kind = logitgof::parse_kind(kind);
    if (!levels.empty()) cfg.levels = logitgof::parse_levels(levels);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : logitgof::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return logitgof::kExitUsage;
  }

  if (*test) cfg.command = logitgof::Command::Test;
  else if (*critvals) cfg.command = logitgof::Command::Critvals;
  else if (*power) cfg.command = logitgof::Command::Power;
  else if (*limitdist) cfg.command = logitgof::Command::Limitdist;
  else cfg.command = logitgof::Command::Verify;

  return logitgof::run(cfg, std::cout, std::cerr);
}
