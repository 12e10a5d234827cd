#include "logitgof/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "logitgof/alternatives.hpp"
#include "logitgof/logistic.hpp"
#include "logitgof/simulation.hpp"
#include "logitgof/table_io.hpp"

using namespace logitgof;
namespace fs = std::filesystem;

namespace {

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("logitgof-cmd-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_values(const std::string& name, const std::vector<double>& values) {
    std::ostringstream s;
    for (double v : values) s << format_double(v) << '\n';
    return write_text(name, s.str());
  }

  fs::path write_text(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  RunConfig config(Command c) const {
    RunConfig cfg;
    cfg.command = c;
    cfg.cache_dir = dir_ / "cache";
    cfg.reps = 2000;
    return cfg;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
  }

  fs::path dir_;
};

std::vector<double> plug_in(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = logistic::quantile((i + 0.5) / n);
  return x;
}

}  // namespace

TEST(ReadSample, SkipsCommentsAndTakesFirstField) {
  std::istringstream in("# header\n\n1.5\n  2 , 99\r\n-3e0,x\n");
  EXPECT_EQ(read_sample(in), (std::vector<double>{1.5, 2.0, -3.0}));
}

TEST(ReadSample, NamesOffendingLine) {
  std::istringstream in("1\n2\nabc\n");
  try {
    read_sample(in);
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream inf("1\ninf\n");
  EXPECT_THROW(read_sample(inf), std::runtime_error);
}

TEST(ParseLevels, CommaSeparated) {
  EXPECT_EQ(parse_levels("0.85, 0.9,0.95"), (std::vector<double>{0.85, 0.9, 0.95}));
  EXPECT_THROW(parse_levels("0.9,,0.95"), std::invalid_argument);
  EXPECT_THROW(parse_levels("x"), std::invalid_argument);
}

TEST_F(CommandsTest, PlugInSampleNotRejected) {
  auto cfg = config(Command::Test);
  cfg.input = write_values("plugin.txt", plug_in(200));
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_test(cfg, out, err), kExitOk) << err.str();
  const std::string text = out.str();
  EXPECT_EQ(text.find("\n0.85,") == std::string::npos, false);
  EXPECT_EQ(text.find(",rejected"), std::string::npos) << text;
  EXPECT_NE(text.find("decision at 0.95: not rejected"), std::string::npos);
  EXPECT_NE(text.find("p-value: 1\n"), std::string::npos) << text;
}

TEST_F(CommandsTest, ConstantSampleIsUsageError) {
  auto cfg = config(Command::Test);
  cfg.input = write_values("const.txt", std::vector<double>(10, 4.2));
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_test(cfg, out, err), kExitUsage);
  EXPECT_NE(err.str().find("DegenerateSample"), std::string::npos);
}

TEST_F(CommandsTest, UnreadableOrMalformedInput) {
  auto cfg = config(Command::Test);
  std::ostringstream out;
  std::ostringstream err;
  cfg.input = dir_ / "missing.txt";
  EXPECT_EQ(cmd_test(cfg, out, err), kExitUsage);
  cfg.input = write_text("bad.txt", "1\n2\nthree\n");
  EXPECT_EQ(cmd_test(cfg, out, err), kExitUsage);
  cfg.input = write_text("one.txt", "1\n");
  EXPECT_EQ(cmd_test(cfg, out, err), kExitUsage);
  cfg.input.reset();
  EXPECT_EQ(cmd_test(cfg, out, err), kExitUsage);
}

TEST_F(CommandsTest, StatisticMatchesLibraryBitExactly) {
  RandomStream stream(kDefaultSeed, static_cast<std::uint64_t>(StreamDomain::Alternative) + 3, 0);
  const auto x = sample(Alternative::Cauchy, 20, stream);
  for (StatisticKind kind : {StatisticKind::Location, StatisticKind::LocationScale}) {
    auto cfg = config(Command::Test);
    cfg.kind = kind;
    cfg.input = write_values("cauchy.txt", x);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cmd_test(cfg, out, err);
    EXPECT_TRUE(code == kExitOk || code == kExitRejected);
    const auto expected = evaluate(kind, Sample(x));
    const std::string text = out.str();
    const auto pos = text.find("): ");
    ASSERT_NE(pos, std::string::npos);
    const auto end = text.find('\n', pos);
    const double printed = parse_double(text.substr(pos + 3, end - pos - 3));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(printed), std::bit_cast<std::uint64_t>(expected.statistic));
  }
}

TEST_F(CommandsTest, EquallySpacedSampleRejectedByV) {
  std::vector<double> x;
  for (int i = 1; i < 400; i += 2) x.push_back(i);
  auto cfg = config(Command::Test);
  cfg.input = write_values("spaced.txt", x);
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_test(cfg, out, err), kExitRejected) << out.str();
  EXPECT_NE(out.str().find("decision at 0.95: rejected"), std::string::npos);
}

TEST_F(CommandsTest, CritvalsWritesTableAndHitsCache) {
  auto cfg = config(Command::Critvals);
  cfg.kind = StatisticKind::Location;
  cfg.size = "20";
  cfg.output = dir_ / "t1.csv";
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cmd_critvals(cfg, out, err), kExitOk) << err.str();
  EXPECT_NE(err.str().find("cache miss"), std::string::npos);
  const std::string first = slurp(*cfg.output);
  EXPECT_EQ(lines(first).front(), kTableHeader);
  EXPECT_EQ(lines(first).size(), 5u);

  cfg.output = dir_ / "t2.csv";
  std::ostringstream err2;
  ASSERT_EQ(cmd_critvals(cfg, out, err2), kExitOk);
  EXPECT_NE(err2.str().find("cache hit"), std::string::npos);
  EXPECT_EQ(slurp(*cfg.output), first);

  std::istringstream in(first);
  const auto table = read_table_csv(in);
  EXPECT_EQ(table, critical_values(StatisticKind::Location, SampleSize::finite(20),
                                   kStandardLevels, 2000, 0, kDefaultSeed));
}

TEST_F(CommandsTest, CritvalsToStdoutWithoutCache) {
  auto cfg = config(Command::Critvals);
  cfg.size = "asymptotic";
  cfg.truncation = 200;
  cfg.use_cache = false;
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cmd_critvals(cfg, out, err), kExitOk) << err.str();
  EXPECT_FALSE(fs::exists(cfg.cache_dir));
  std::istringstream in(out.str());
  const auto table = read_table_csv(in);
  EXPECT_TRUE(table.size.is_asymptotic());
  EXPECT_EQ(table.truncation, 200u);
}

TEST_F(CommandsTest, CritvalsRejectsBadParameters) {
  std::ostringstream out;
  std::ostringstream err;
  auto cfg = config(Command::Critvals);
  cfg.size = "1";
  EXPECT_EQ(cmd_critvals(cfg, out, err), kExitUsage);
  cfg.size = "20";
  cfg.levels = {0.9, 0.5};
  EXPECT_EQ(cmd_critvals(cfg, out, err), kExitUsage);
  cfg.levels = {0.9};
  // A regular file where a directory is needed makes the path unwritable even for root.
  cfg.output = write_text("plain-file", "x\n") / "x.csv";
  EXPECT_EQ(cmd_critvals(cfg, out, err), kExitUsage);
}

TEST_F(CommandsTest, PowerRow) {
  auto cfg = config(Command::Power);
  cfg.size = "20";
  cfg.alternative = "cauchy";
  cfg.table_reps = 20000;
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cmd_power(cfg, out, err), kExitOk) << err.str();
  const auto rows = lines(out.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "kind,alternative,n,alpha,power,reps,seed");
  EXPECT_EQ(rows[1].substr(0, 17), "v,cauchy,20,0.1,0");
  const double power = parse_double(rows[1].substr(16, rows[1].find(',', 16) - 16));
  EXPECT_NEAR(power, 0.88, 0.05);
  EXPECT_NE(rows[1].find(",2000,20100514"), std::string::npos);
}

TEST_F(CommandsTest, PowerRejectsUnknownAlternative) {
  auto cfg = config(Command::Power);
  cfg.size = "20";
  cfg.alternative = "pareto";
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_power(cfg, out, err), kExitUsage);
  EXPECT_NE(err.str().find("pareto"), std::string::npos);
}

TEST_F(CommandsTest, LimitdistRows) {
  auto cfg = config(Command::Limitdist);
  cfg.kind = StatisticKind::Location;
  cfg.reps = 1000;
  cfg.truncation = 500;
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cmd_limitdist(cfg, out, err), kExitOk);
  const auto rows = lines(out.str());
  ASSERT_EQ(rows.size(), 1001u);
  EXPECT_EQ(rows[0], "x,cdf");
  double prev_x = -1.0;
  double prev_p = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto comma = rows[i].find(',');
    const double x = parse_double(rows[i].substr(0, comma));
    const double p = parse_double(rows[i].substr(comma + 1));
    EXPECT_GE(x, prev_x);
    EXPECT_GT(p, prev_p);
    prev_x = x;
    prev_p = p;
  }
  EXPECT_EQ(prev_p, 1.0);
}

TEST_F(CommandsTest, VerifyPasses) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_verify(config(Command::Verify), out, err), kExitOk);
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("all checks passed"), std::string::npos);
}

TEST_F(CommandsTest, RunDispatches) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(config(Command::Verify), out, err), kExitOk);
  auto cfg = config(Command::Limitdist);
  cfg.reps = 10;
  cfg.truncation = 50;
  std::ostringstream out2;
  EXPECT_EQ(run(cfg, out2, err), kExitOk);
  EXPECT_EQ(lines(out2.str()).size(), 11u);
}
