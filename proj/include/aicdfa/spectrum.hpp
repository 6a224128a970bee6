#pragma once

#include <optional>
#include <vector>

#include "aicdfa/scaling.hpp"

namespace aicdfa {

struct MultifractalSpectrum {
  std::vector<double> q_values;
  std::vector<double> h;        // generalized Hurst exponents h(q)
  std::vector<double> tau;      // tau(q) = q h(q) - D_f
  std::vector<double> alpha;    // dtau/dq on the q grid
  std::vector<double> f_alpha;  // q alpha - tau
  double delta_alpha = 0.0;     // max(alpha) - min(alpha)
  double fractal_dim = 1.0;
};

// Per-q power-law fit of F_q(t) over the (optional) scale range.
std::pair<std::vector<double>, std::vector<double>> hq_curve(
    const FluctuationFunction& fluct,
    std::optional<ScaleRange> fit_range = std::nullopt);

std::vector<double> tau_of_q(const std::vector<double>& q_values,
                             const std::vector<double>& h,
                             double fractal_dim = 1.0);

// Legendre transform: alpha = dtau/dq (central differences, one-sided at the
// ends), f(alpha) = q*alpha - tau at the same q.
std::pair<std::vector<double>, std::vector<double>> legendre(
    const std::vector<double>& q_values, const std::vector<double>& tau);

double spectrum_width(const std::vector<double>& alpha);

MultifractalSpectrum make_spectrum(const FluctuationFunction& fluct,
                                   std::optional<ScaleRange> fit_range =
                                       std::nullopt,
                                   double fractal_dim = 1.0);

}  // namespace aicdfa
