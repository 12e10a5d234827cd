#pragma once

// The null law and the fourteen alternatives of the power study, each in its
// standard form.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "logitgof/rng.hpp"

namespace logitgof {

enum class Alternative {
  Logistic,
  Normal01,
  Uniform01,
  Cauchy,
  Laplace,     // density e^{-|t|} / 2
  Exp1,
  TriangleI,   // density 1 - |t| on (-1, 1)
  TriangleII,  // density 2 - 2t on (0, 1)
  Beta22,
  Weibull2,    // density 2t e^{-t^2}, t > 0
  Gamma21,
  Lognormal,   // e^Z
  Student5,
  ChiSq1,
  NegExp,      // -E with E ~ Exp(1)
};

inline constexpr std::array kAllAlternatives = {
    Alternative::Logistic,  Alternative::Normal01,   Alternative::Uniform01,
    Alternative::Cauchy,    Alternative::Laplace,    Alternative::Exp1,
    Alternative::TriangleI, Alternative::TriangleII, Alternative::Beta22,
    Alternative::Weibull2,  Alternative::Gamma21,    Alternative::Lognormal,
    Alternative::Student5,  Alternative::ChiSq1,     Alternative::NegExp,
};

/// CLI name, e.g. "triangle1", "beta22", "negexp".
std::string_view name(Alternative alt) noexcept;
/// Accepts the CLI names plus a few spellings ("normal", "n01", "t5", "chisq1").
std::optional<Alternative> parse_alternative(std::string_view text);

/// One variate from `alt`.
double draw(Alternative alt, RandomStream& stream);

/// n i.i.d. variates. Throws std::invalid_argument for n < 1.
std::vector<double> sample(Alternative alt, std::size_t n, RandomStream& stream);

/// n standard logistic variates by inversion. Throws std::invalid_argument for n < 2.
std::vector<double> null_sample(std::size_t n, RandomStream& stream);

}  // namespace logitgof
