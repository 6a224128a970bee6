#pragma once

// Independent naive MF-DFA used as a test oracle. Deliberately written with
// explicit loops and a normal-equations line fit, sharing no code with the
// production engine.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

inline std::vector<double> naive_profile(const std::vector<double>& a,
                                         bool subtract_mean) {
  double mean = 0.0;
  if (subtract_mean) {
    for (std::size_t i = 0; i < a.size(); ++i) mean += a[i];
    mean = mean / static_cast<double>(a.size());
  }
  std::vector<double> b(a.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum = sum + (a[i] - mean);
    b[i] = sum;
  }
  return b;
}

// rms residual of a straight-line least-squares fit over b[start..start+t),
// solved from the raw 2x2 normal equations with x = 1..t.
inline double naive_window_rms(const std::vector<double>& b, std::size_t start,
                               std::size_t t) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    const double x = static_cast<double>(i + 1);
    const double y = b[start + i];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(t);
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double icept = (sy * sxx - sx * sxy) / det;
  double ss = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    const double x = static_cast<double>(i + 1);
    const double r = b[start + i] - (icept + slope * x);
    ss += r * r;
  }
  return std::sqrt(ss / n);
}

inline std::vector<double> naive_window_fluctuations(
    const std::vector<double>& prof, std::size_t t) {
  const std::size_t nt = prof.size() / t;
  std::vector<double> f;
  for (std::size_t k = 0; k < nt; ++k)
    f.push_back(naive_window_rms(prof, k * t, t));
  return f;
}

// F_q(t) for one scale, forward direction, order-1 detrending.
inline double naive_fq(const std::vector<double>& series, std::size_t t,
                       double q, bool subtract_mean) {
  const auto prof = naive_profile(series, subtract_mean);
  const auto f = naive_window_fluctuations(prof, t);
  const double n = static_cast<double>(f.size());
  if (q == 0.0) {
    double acc = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) acc += std::log(f[k]);
    return std::exp(acc / n);
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) acc += std::pow(f[k], q);
  return std::pow(acc / n, 1.0 / q);
}

}  // namespace oracle
