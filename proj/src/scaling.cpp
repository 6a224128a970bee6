#include "aicdfa/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aicdfa/common.hpp"

namespace aicdfa {

namespace {

std::size_t q_row(const FluctuationFunction& fluct, double q) {
  for (std::size_t i = 0; i < fluct.q_values.size(); ++i)
    if (fluct.q_values[i] == q) return i;
  throw config_error("q = " + std::to_string(q) +
                     " not present in fluctuation function");
}

PowerLawFit ols_loglog(const std::vector<double>& logx,
                       const std::vector<double>& logy, ScaleRange range) {
  const std::size_t n = logx.size();
  const double dn = static_cast<double>(n);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += logx[i];
    my += logy[i];
  }
  mx /= dn;
  my /= dn;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (logx[i] - mx) * (logx[i] - mx);
    sxy += (logx[i] - mx) * (logy[i] - my);
  }
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  fit.fit_range = range;
  fit.n_points = n;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = logy[i] - (fit.intercept + fit.exponent * logx[i]);
    sse += r * r;
  }
  fit.residual_sse = sse;
  fit.stderr_slope = n > 2 ? std::sqrt(sse / (dn - 2.0) / sxx) : 0.0;
  return fit;
}

// Gaussian log-residual BIC; SSE clamped away from zero so exact fits
// still compare finitely.
double bic(double sse, std::size_t n, std::size_t n_params) {
  const double dn = static_cast<double>(n);
  return dn * std::log(std::max(sse, 1e-30) / dn) +
         static_cast<double>(n_params) * std::log(dn);
}

}  // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::AntiCorrelated: return "anti-correlated";
    case Regime::WhiteNoise: return "white-noise";
    case Regime::LongRangeCorrelated: return "long-range-correlated";
    case Regime::OneOverF: return "one-over-f";
    case Regime::Unstable: return "unstable";
  }
  throw config_error("invalid regime");
}

PowerLawFit fit_power_law(const std::vector<std::size_t>& scales,
                          const std::vector<double>& F,
                          std::optional<ScaleRange> range) {
  if (scales.size() != F.size())
    throw config_error("scale/F length mismatch");
  std::vector<double> lx, ly;
  std::size_t smin = std::numeric_limits<std::size_t>::max(), smax = 0;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (range && (scales[i] < range->min || scales[i] > range->max)) continue;
    if (!(F[i] > 0.0))
      throw numerical_error("non-positive fluctuation value at scale " +
                            std::to_string(scales[i]));
    lx.push_back(std::log10(static_cast<double>(scales[i])));
    ly.push_back(std::log10(F[i]));
    smin = std::min(smin, scales[i]);
    smax = std::max(smax, scales[i]);
  }
  if (lx.size() < 3)
    throw config_error("power-law fit needs at least 3 scale points in range");
  return ols_loglog(lx, ly, ScaleRange{smin, smax});
}

PowerLawFit fit_power_law(const FluctuationFunction& fluct, double q,
                          std::optional<ScaleRange> range) {
  return fit_power_law(fluct.scales, fluct.F[q_row(fluct, q)], range);
}

CrossoverFit fit_crossover(const std::vector<std::size_t>& scales,
                           const std::vector<double>& F) {
  const std::size_t n = scales.size();
  if (n < 7)
    throw config_error("too few scales for crossover fit (need >= 7)");
  if (scales.size() != F.size())
    throw config_error("scale/F length mismatch");

  CrossoverFit best;
  best.single = fit_power_law(scales, F);
  double best_sse = std::numeric_limits<double>::infinity();
  // Candidate break points share the scale with both segments.
  for (std::size_t b = 2; b + 3 <= n; ++b) {
    const ScaleRange left_range{scales.front(), scales[b]};
    const ScaleRange right_range{scales[b], scales.back()};
    const auto left = fit_power_law(scales, F, left_range);
    const auto right = fit_power_law(scales, F, right_range);
    const double sse = left.residual_sse + right.residual_sse;
    // Smallest t_c wins ties.
    const bool first = !std::isfinite(best_sse);
    if (first || sse < best_sse - 1e-12 * std::max(1.0, best_sse)) {
      best_sse = sse;
      best.t_c = scales[b];
      best.left = left;
      best.right = right;
    }
  }
  const double bic_two = bic(best_sse, n, 4);
  const double bic_one = bic(best.single.residual_sse, n, 2);
  best.delta_bic = bic_two - bic_one;
  best.preferred =
      bic_two < bic_one ? ScalingModel::TwoStage : ScalingModel::Single;
  return best;
}

CrossoverFit fit_crossover(const FluctuationFunction& fluct, double q) {
  return fit_crossover(fluct.scales, fluct.F[q_row(fluct, q)]);
}

Regime classify_regime(double exponent, double tol) {
  if (!std::isfinite(exponent))
    throw numerical_error("non-finite exponent");
  if (std::abs(exponent - 0.5) <= tol) return Regime::WhiteNoise;
  if (std::abs(exponent - 1.0) <= tol) return Regime::OneOverF;
  if (exponent < 0.5) return Regime::AntiCorrelated;
  if (exponent < 1.0) return Regime::LongRangeCorrelated;
  return Regime::Unstable;
}

}  // namespace aicdfa
