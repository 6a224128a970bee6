#include "aicdfa/synth.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "aicdfa/common.hpp"

namespace aicdfa {

namespace {

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void check_common(const GeneratorSpec& spec) {
  if (spec.length < 16) throw config_error("generator length must be >= 16");
}

}  // namespace

double NormalRng::next_uniform() {
  // 53-bit mantissa, offset by half an ulp so the value is never 0 or 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
}

double NormalRng::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::vector<double> white_noise(const GeneratorSpec& spec) {
  check_common(spec);
  NormalRng rng(spec.seed);
  std::vector<double> out(spec.length);
  for (double& v : out) v = rng.next();
  return out;
}

double fgn_autocovariance(double hurst, std::size_t lag) {
  const double k = static_cast<double>(lag);
  const double e = 2.0 * hurst;
  if (lag == 0) return 1.0;
  return 0.5 * (std::pow(k + 1.0, e) - 2.0 * std::pow(k, e) +
                std::pow(k - 1.0, e));
}

std::vector<double> fgn(const GeneratorSpec& spec) {
  check_common(spec);
  if (!is_power_of_two(spec.length))
    throw config_error("fGn length must be a power of 2");
  if (!(spec.hurst > 0.0 && spec.hurst < 1.0))
    throw config_error("hurst must be in (0,1)");

  const std::size_t n = spec.length;
  const std::size_t m = 2 * n;

  // First row of the circulant embedding of the covariance.
  std::vector<double> circ(m);
  for (std::size_t k = 0; k <= n; ++k)
    circ[k] = fgn_autocovariance(spec.hurst, k);
  for (std::size_t k = 1; k < n; ++k) circ[m - k] = circ[k];

  // std::complex<double> is layout-compatible with fftw_complex.
  std::vector<std::complex<double>> buf(m);
  for (std::size_t i = 0; i < m; ++i) buf[i] = {circ[i], 0.0};
  auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(m), raw, raw,
                                    FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  std::vector<double> lambda(m);
  for (std::size_t i = 0; i < m; ++i) {
    lambda[i] = buf[i].real();
    if (lambda[i] < -1e-8)
      throw numerical_error("circulant embedding not positive definite (H = " +
                            std::to_string(spec.hurst) + ")");
    if (lambda[i] < 0.0) lambda[i] = 0.0;
  }

  // Dietrich-Newsam: real part of the DFT of sqrt(lambda/m) (U + iV)
  // has covariance gamma on its first n entries.
  NormalRng rng(spec.seed);
  for (std::size_t i = 0; i < m; ++i) {
    const double a = std::sqrt(lambda[i] / static_cast<double>(m));
    buf[i] = {a * rng.next(), a * rng.next()};
  }
  plan = fftw_plan_dft_1d(static_cast<int>(m), raw, raw, FFTW_FORWARD,
                          FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = buf[i].real();
  return out;
}

std::vector<double> binomial_cascade(const GeneratorSpec& spec) {
  check_common(spec);
  if (!is_power_of_two(spec.length))
    throw config_error("cascade length must be a power of 2");
  const double a = spec.multiplier;
  if (!(a > 0.0 && a < 1.0))
    throw config_error("cascade multiplier must be in (0,1)");

  NormalRng rng(spec.seed);
  std::vector<double> cells{1.0};
  while (cells.size() < spec.length) {
    std::vector<double> next;
    next.reserve(cells.size() * 2);
    for (double x : cells) {
      double lo = 2.0 * a * x;
      double hi = 2.0 * (1.0 - a) * x;
      if (spec.randomize_orientation && (rng.next_u64() & 1u)) std::swap(lo, hi);
      next.push_back(lo);
      next.push_back(hi);
    }
    cells = std::move(next);
  }
  return cells;
}

CascadeAnalytic cascade_analytic(double q, double a) {
  if (!(a > 0.0 && a < 1.0))
    throw config_error("cascade multiplier must be in (0,1)");
  const double ln2 = std::numbers::ln2;
  const double aq = std::pow(a, q);
  const double bq = std::pow(1.0 - a, q);
  CascadeAnalytic out;
  out.tau = -std::log2(aq + bq);
  out.alpha = -(aq * std::log(a) + bq * std::log(1.0 - a)) / ((aq + bq) * ln2);
  if (q != 0.0) {
    out.h = (out.tau + 1.0) / q;
  } else {
    // l'Hopital on (tau(q)+1)/q at q = 0: tau(0) = -1, so the limit is
    // tau'(0) = -log2(a(1-a))/2.
    out.h = -(std::log(a) + std::log(1.0 - a)) / (2.0 * ln2);
  }
  return out;
}

std::vector<double> generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::White: return white_noise(spec);
    case GeneratorKind::Fgn: return fgn(spec);
    case GeneratorKind::Cascade: return binomial_cascade(spec);
  }
  throw config_error("invalid generator kind");
}

}  // namespace aicdfa
