#include "aicdfa/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "aicdfa/common.hpp"

namespace aicdfa {

std::pair<std::vector<double>, std::vector<double>> hq_curve(
    const FluctuationFunction& fluct, std::optional<ScaleRange> fit_range) {
  std::vector<double> h;
  h.reserve(fluct.q_values.size());
  for (std::size_t qi = 0; qi < fluct.q_values.size(); ++qi)
    h.push_back(fit_power_law(fluct.scales, fluct.F[qi], fit_range).exponent);
  return {fluct.q_values, std::move(h)};
}

std::vector<double> tau_of_q(const std::vector<double>& q_values,
                             const std::vector<double>& h,
                             double fractal_dim) {
  if (q_values.size() != h.size())
    throw config_error("q/h length mismatch");
  std::vector<double> tau(q_values.size());
  for (std::size_t i = 0; i < q_values.size(); ++i) {
    if (!std::isfinite(h[i])) throw numerical_error("non-finite h(q)");
    tau[i] = q_values[i] * h[i] - fractal_dim;
  }
  return tau;
}

std::pair<std::vector<double>, std::vector<double>> legendre(
    const std::vector<double>& q_values, const std::vector<double>& tau) {
  const std::size_t n = q_values.size();
  if (n < 3) throw config_error("Legendre transform needs at least 3 q points");
  if (tau.size() != n) throw config_error("q/tau length mismatch");
  for (std::size_t i = 1; i < n; ++i)
    if (q_values[i] <= q_values[i - 1])
      throw config_error("q grid must be strictly increasing");

  std::vector<double> alpha(n), f_alpha(n);
  alpha[0] = (tau[1] - tau[0]) / (q_values[1] - q_values[0]);
  alpha[n - 1] = (tau[n - 1] - tau[n - 2]) / (q_values[n - 1] - q_values[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i)
    alpha[i] = (tau[i + 1] - tau[i - 1]) / (q_values[i + 1] - q_values[i - 1]);
  for (std::size_t i = 0; i < n; ++i)
    f_alpha[i] = q_values[i] * alpha[i] - tau[i];
  return {std::move(alpha), std::move(f_alpha)};
}

double spectrum_width(const std::vector<double>& alpha) {
  if (alpha.empty()) throw config_error("empty alpha");
  auto [mn, mx] = std::minmax_element(alpha.begin(), alpha.end());
  return *mx - *mn;
}

MultifractalSpectrum make_spectrum(const FluctuationFunction& fluct,
                                   std::optional<ScaleRange> fit_range,
                                   double fractal_dim) {
  MultifractalSpectrum sp;
  auto [q, h] = hq_curve(fluct, fit_range);
  sp.q_values = std::move(q);
  sp.h = std::move(h);
  sp.fractal_dim = fractal_dim;
  sp.tau = tau_of_q(sp.q_values, sp.h, fractal_dim);
  auto [alpha, f_alpha] = legendre(sp.q_values, sp.tau);
  sp.alpha = std::move(alpha);
  sp.f_alpha = std::move(f_alpha);
  sp.delta_alpha = spectrum_width(sp.alpha);
  return sp;
}

}  // namespace aicdfa
