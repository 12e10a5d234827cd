#include "logitgof/alternatives.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "logitgof/logistic.hpp"

namespace logitgof {

namespace {

struct NameEntry {
  Alternative alt;
  std::string_view name;
};

constexpr std::array<NameEntry, 15> kNames = {{
    {Alternative::Logistic, "logistic"},
    {Alternative::Normal01, "normal01"},
    {Alternative::Uniform01, "uniform"},
    {Alternative::Cauchy, "cauchy"},
    {Alternative::Laplace, "laplace"},
    {Alternative::Exp1, "exp1"},
    {Alternative::TriangleI, "triangle1"},
    {Alternative::TriangleII, "triangle2"},
    {Alternative::Beta22, "beta22"},
    {Alternative::Weibull2, "weibull2"},
    {Alternative::Gamma21, "gamma21"},
    {Alternative::Lognormal, "lognormal"},
    {Alternative::Student5, "student5"},
    {Alternative::ChiSq1, "chisq1"},
    {Alternative::NegExp, "negexp"},
}};

struct AliasEntry {
  std::string_view alias;
  Alternative alt;
};

constexpr std::array<AliasEntry, 8> kAliases = {{
    {"normal", Alternative::Normal01},
    {"n01", Alternative::Normal01},
    {"uniform01", Alternative::Uniform01},
    {"exp", Alternative::Exp1},
    {"t5", Alternative::Student5},
    {"chi2", Alternative::ChiSq1},
    {"chisq", Alternative::ChiSq1},
    {"negexp1", Alternative::NegExp},
}};

double exp1(RandomStream& s) { return -std::log(s.uniform()); }

}  // namespace

std::string_view name(Alternative alt) noexcept {
  for (const auto& e : kNames) {
    if (e.alt == alt) return e.name;
  }
  return "unknown";
}

std::optional<Alternative> parse_alternative(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& e : kNames) {
    if (e.name == lower) return e.alt;
  }
  for (const auto& e : kAliases) {
    if (e.alias == lower) return e.alt;
  }
  return std::nullopt;
}

double draw(Alternative alt, RandomStream& s) {
  switch (alt) {
    case Alternative::Logistic:
      return logistic::quantile(s.uniform());
    case Alternative::Normal01:
      return s.normal();
    case Alternative::Uniform01:
      return s.uniform();
    case Alternative::Cauchy:
      return std::tan(std::numbers::pi * (s.uniform() - 0.5));
    case Alternative::Laplace: {
      const double u = s.uniform() - 0.5;
      return u < 0.0 ? std::log1p(2.0 * u) : -std::log1p(-2.0 * u);
    }
    case Alternative::Exp1:
      return exp1(s);
    case Alternative::TriangleI: {
      const double u = s.uniform();
      return u < 0.5 ? std::sqrt(2.0 * u) - 1.0 : 1.0 - std::sqrt(2.0 * (1.0 - u));
    }
    case Alternative::TriangleII:
      return 1.0 - std::sqrt(1.0 - s.uniform());
    case Alternative::Beta22: {
      // Median of three uniforms.
      const double u1 = s.uniform();
      const double u2 = s.uniform();
      const double u3 = s.uniform();
      return std::max(std::min(u1, u2), std::min(std::max(u1, u2), u3));
    }
    case Alternative::Weibull2:
      return std::sqrt(exp1(s));
    case Alternative::Gamma21:
      return exp1(s) + exp1(s);
    case Alternative::Lognormal:
      return std::exp(s.normal());
    case Alternative::Student5: {
      const double z = s.normal();
      double chi2 = 0.0;
      for (int i = 0; i < 5; ++i) {
        const double g = s.normal();
        chi2 += g * g;
      }
      return z / std::sqrt(chi2 / 5.0);
    }
    case Alternative::ChiSq1: {
      const double z = s.normal();
      return z * z;
    }
    case Alternative::NegExp:
      return -exp1(s);
  }
  throw std::logic_error("unhandled alternative");
}

std::vector<double> sample(Alternative alt, std::size_t n, RandomStream& stream) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::vector<double> out(n);
  for (double& x : out) x = draw(alt, stream);
  return out;
}

std::vector<double> null_sample(std::size_t n, RandomStream& stream) {
  if (n < 2) throw std::invalid_argument("null sample size must be >= 2");
  return sample(Alternative::Logistic, n, stream);
}

}  // namespace logitgof
