#include "aicdfa/fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aicdfa/common.hpp"

namespace aicdfa {

namespace {

constexpr double kZeroFloor = 1e-12;

// Sum of squared residuals of a least-squares polynomial of degree `order`
// fitted to y[0..t) against x = 0..t-1 (centered internally).
double detrended_rss(const double* y, std::size_t t, int order) {
  const double n = static_cast<double>(t);
  const double xbar = (n - 1.0) / 2.0;
  if (order == 1) {
    double ybar = 0.0;
    for (std::size_t i = 0; i < t; ++i) ybar += y[i];
    ybar /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
      const double dx = static_cast<double>(i) - xbar;
      sxy += dx * (y[i] - ybar);
      sxx += dx * dx;
    }
    const double slope = sxy / sxx;
    double rss = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
      const double r = y[i] - ybar - slope * (static_cast<double>(i) - xbar);
      rss += r * r;
    }
    return rss;
  }

  // Normal equations on x scaled to [-1, 1].
  const int p = order + 1;
  const double scale = t > 1 ? 2.0 / (n - 1.0) : 1.0;
  std::vector<double> ata(static_cast<std::size_t>(p) * p, 0.0);
  std::vector<double> atb(p, 0.0);
  std::vector<double> pow_x(p);
  for (std::size_t i = 0; i < t; ++i) {
    const double x = (static_cast<double>(i) - xbar) * scale;
    pow_x[0] = 1.0;
    for (int j = 1; j < p; ++j) pow_x[j] = pow_x[j - 1] * x;
    for (int j = 0; j < p; ++j) {
      for (int k = 0; k <= j; ++k) ata[j * p + k] += pow_x[j] * pow_x[k];
      atb[j] += pow_x[j] * y[i];
    }
  }
  for (int j = 0; j < p; ++j)
    for (int k = j + 1; k < p; ++k) ata[j * p + k] = ata[k * p + j];

  // Gaussian elimination with partial pivoting.
  std::vector<double> coef = atb;
  for (int col = 0; col < p; ++col) {
    int piv = col;
    for (int r = col + 1; r < p; ++r)
      if (std::abs(ata[r * p + col]) > std::abs(ata[piv * p + col])) piv = r;
    if (piv != col) {
      for (int c = 0; c < p; ++c) std::swap(ata[col * p + c], ata[piv * p + c]);
      std::swap(coef[col], coef[piv]);
    }
    const double d = ata[col * p + col];
    if (d == 0.0) throw numerical_error("singular detrend system");
    for (int r = col + 1; r < p; ++r) {
      const double f = ata[r * p + col] / d;
      for (int c = col; c < p; ++c) ata[r * p + c] -= f * ata[col * p + c];
      coef[r] -= f * coef[col];
    }
  }
  for (int r = p - 1; r >= 0; --r) {
    double s = coef[r];
    for (int c = r + 1; c < p; ++c) s -= ata[r * p + c] * coef[c];
    coef[r] = s / ata[r * p + r];
  }

  double rss = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    const double x = (static_cast<double>(i) - xbar) * scale;
    double fit = coef[p - 1];
    for (int j = p - 2; j >= 0; --j) fit = fit * x + coef[j];
    const double r = y[i] - fit;
    rss += r * r;
  }
  return rss;
}

}  // namespace

ScaleGrid ScaleGrid::log_spaced(std::size_t min_scale, std::size_t max_scale,
                                std::size_t count) {
  if (min_scale < 2 || max_scale < min_scale || count < 1)
    throw config_error("invalid scale grid parameters");
  std::vector<std::size_t> scales;
  const double lo = std::log(static_cast<double>(min_scale));
  const double hi = std::log(static_cast<double>(max_scale));
  for (std::size_t i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0
                                : static_cast<double>(i) /
                                      static_cast<double>(count - 1);
    const auto s = static_cast<std::size_t>(
        std::llround(std::exp(lo + f * (hi - lo))));
    scales.push_back(std::clamp(s, min_scale, max_scale));
  }
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  return ScaleGrid{std::move(scales)};
}

void ScaleGrid::validate(std::size_t series_length, int detrend_order) const {
  if (scales.empty()) throw config_error("empty scale grid");
  std::size_t prev = 0;
  for (std::size_t s : scales) {
    if (s <= prev) throw config_error("scales not strictly increasing");
    if (s < static_cast<std::size_t>(detrend_order) + 2)
      throw config_error("scale " + std::to_string(s) +
                         " too small for detrend order " +
                         std::to_string(detrend_order));
    prev = s;
  }
  if (scales.back() > series_length / 4)
    throw config_error("max scale " + std::to_string(scales.back()) +
                       " exceeds series length / 4 = " +
                       std::to_string(series_length / 4));
}

ScaleGrid default_scale_grid(std::size_t series_length) {
  if (series_length < 16)
    throw config_error("series too short for default scale grid");
  return ScaleGrid::log_spaced(4, series_length / 4, 20);
}

std::vector<double> profile(const std::vector<double>& series,
                            bool subtract_mean) {
  if (series.empty()) throw data_error("empty series");
  double m = 0.0;
  if (subtract_mean) {
    for (double v : series) m += v;
    m /= static_cast<double>(series.size());
  }
  std::vector<double> out(series.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    acc += series[i] - m;
    out[i] = acc;
  }
  return out;
}

std::vector<double> window_fluctuations(const std::vector<double>& prof,
                                        std::size_t t, int detrend_order,
                                        Direction direction) {
  const std::size_t n = prof.size();
  // Grids cap scales at length/4; standalone calls only need one full window.
  if (t < static_cast<std::size_t>(detrend_order) + 2 || t > n)
    throw config_error("scale " + std::to_string(t) +
                       " out of range for series length " + std::to_string(n));
  const std::size_t nt = n / t;
  std::vector<double> f;
  f.reserve(direction == Direction::Bidirectional ? 2 * nt : nt);
  for (std::size_t k = 0; k < nt; ++k)
    f.push_back(std::sqrt(detrended_rss(prof.data() + k * t, t, detrend_order) /
                          static_cast<double>(t)));
  if (direction == Direction::Bidirectional) {
    const std::size_t offset = n - nt * t;
    for (std::size_t k = 0; k < nt; ++k)
      f.push_back(std::sqrt(
          detrended_rss(prof.data() + offset + k * t, t, detrend_order) /
          static_cast<double>(t)));
  }
  return f;
}

namespace {

// Generalized mean of the window fluctuations for one (q, scale) pair.
double moment_mean(const std::vector<double>& f, double q) {
  const double n = static_cast<double>(f.size());
  if (q == 0.0) {
    double acc = 0.0;
    for (double v : f) acc += std::log(v);
    return std::exp(acc / n);
  }
  double acc = 0.0;
  for (double v : f) acc += std::pow(v, q);
  return std::pow(acc / n, 1.0 / q);
}

FluctuationFunction fluctuation_impl(const std::vector<double>& series,
                                     const ScaleGrid& grid,
                                     const std::vector<double>& q_values,
                                     const DetrendOptions& opts,
                                     ZeroPolicy zero_policy) {
  grid.validate(series.size(), opts.order);
  for (double q : q_values)
    if (!std::isfinite(q)) throw config_error("non-finite q value");

  FluctuationFunction out;
  out.scales = grid.scales;
  out.q_values = q_values;
  out.direction = opts.direction;
  out.F.assign(q_values.size(), std::vector<double>(grid.scales.size()));
  out.n_windows.resize(grid.scales.size());

  const bool need_positive =
      std::any_of(q_values.begin(), q_values.end(),
                  [](double q) { return q <= 0.0; });
  const auto prof = profile(series, opts.subtract_mean);
  for (std::size_t si = 0; si < grid.scales.size(); ++si) {
    auto f = window_fluctuations(prof, grid.scales[si], opts.order,
                                 opts.direction);
    out.n_windows[si] = f.size();
    if (need_positive) {
      for (double& v : f) {
        if (v == 0.0) {
          if (zero_policy == ZeroPolicy::Error)
            throw numerical_error(
                "zero window fluctuation at scale " +
                std::to_string(grid.scales[si]) +
                " with non-positive q (use zero-policy floor)");
          v = kZeroFloor;
          ++out.floored_windows;
        }
      }
    }
    for (std::size_t qi = 0; qi < q_values.size(); ++qi)
      out.F[qi][si] = moment_mean(f, q_values[qi]);
  }
  return out;
}

}  // namespace

FluctuationFunction dfa(const std::vector<double>& series,
                        const ScaleGrid& grid, const DetrendOptions& opts) {
  return fluctuation_impl(series, grid, {2.0}, opts, ZeroPolicy::Error);
}

FluctuationFunction mfdfa(const std::vector<double>& series,
                          const ScaleGrid& grid,
                          const std::vector<double>& q_values,
                          const DetrendOptions& opts, ZeroPolicy zero_policy) {
  if (q_values.empty()) throw config_error("empty q grid");
  return fluctuation_impl(series, grid, q_values, opts, zero_policy);
}

}  // namespace aicdfa
