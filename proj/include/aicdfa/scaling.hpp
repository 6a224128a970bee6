#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aicdfa/fluctuation.hpp"

namespace aicdfa {

struct ScaleRange {
  std::size_t min = 0;
  std::size_t max = 0;  // inclusive
};

struct PowerLawFit {
  double exponent = 0.0;   // slope in log10-log10 space
  double intercept = 0.0;  // log10 amplitude
  ScaleRange fit_range;
  double residual_sse = 0.0;
  double stderr_slope = 0.0;
  std::size_t n_points = 0;
};

enum class ScalingModel { Single, TwoStage };

struct CrossoverFit {
  std::size_t t_c = 0;
  PowerLawFit left;   // scales <= t_c
  PowerLawFit right;  // scales >= t_c
  PowerLawFit single; // whole-range fit, for comparison
  ScalingModel preferred = ScalingModel::Single;
  double delta_bic = 0.0;  // BIC(two-stage) - BIC(single)
};

enum class Regime { AntiCorrelated, WhiteNoise, LongRangeCorrelated, OneOverF, Unstable };

std::string to_string(Regime regime);

// OLS of log10 F against log10 t. Unset range fields mean unbounded.
PowerLawFit fit_power_law(const std::vector<std::size_t>& scales,
                          const std::vector<double>& F,
                          std::optional<ScaleRange> range = std::nullopt);

PowerLawFit fit_power_law(const FluctuationFunction& fluct, double q,
                          std::optional<ScaleRange> range = std::nullopt);

// Exhaustive break-point search over interior scales with >= 3 points on
// each side (break point shared); BIC decides single vs two-stage.
CrossoverFit fit_crossover(const std::vector<std::size_t>& scales,
                           const std::vector<double>& F);

CrossoverFit fit_crossover(const FluctuationFunction& fluct, double q);

// Boundary bands H = 0.5 and H = 1.0 (width `tol`) take precedence over the
// open intervals they border.
Regime classify_regime(double exponent, double tol = 0.02);

}  // namespace aicdfa
