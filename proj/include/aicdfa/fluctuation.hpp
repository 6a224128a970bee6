#pragma once

#include <cstddef>
#include <vector>

namespace aicdfa {

enum class Direction { Forward, Bidirectional };
enum class ZeroPolicy { Error, Floor };

// Window sizes for the fluctuation function, strictly increasing.
struct ScaleGrid {
  std::vector<std::size_t> scales;

  // `count` log-spaced integer scales in [min_scale, max_scale], deduplicated.
  static ScaleGrid log_spaced(std::size_t min_scale, std::size_t max_scale,
                              std::size_t count);

  void validate(std::size_t series_length, int detrend_order) const;
};

// Default grid: 20 log-spaced scales between 4 and length/4.
ScaleGrid default_scale_grid(std::size_t series_length);

struct DetrendOptions {
  int order = 1;
  Direction direction = Direction::Forward;
  bool subtract_mean = true;
};

struct FluctuationFunction {
  std::vector<std::size_t> scales;
  std::vector<double> q_values;
  std::vector<std::vector<double>> F;  // [q][scale]
  std::vector<std::size_t> n_windows;  // per scale
  Direction direction = Direction::Forward;
  std::size_t floored_windows = 0;  // zero-policy floor substitutions
};

// Cumulative sum B(t) = sum_{s<=t} (A(s) - m), m = mean when subtract_mean.
std::vector<double> profile(const std::vector<double>& series,
                            bool subtract_mean = true);

// Per-window rms detrended fluctuation f_k(t) over non-overlapping windows
// of the profile. Forward partitions from the start, discarding the tail;
// bidirectional appends the partition anchored at the end.
std::vector<double> window_fluctuations(const std::vector<double>& prof,
                                        std::size_t t, int detrend_order,
                                        Direction direction);

// DFA: F2(t)^2 = mean_k f_k(t)^2 over the grid (single q = 2 row).
FluctuationFunction dfa(const std::vector<double>& series,
                        const ScaleGrid& grid, const DetrendOptions& opts = {});

// MF-DFA: F_q(t) = (mean_k f_k^q)^(1/q); q = 0 uses the log-average form.
FluctuationFunction mfdfa(const std::vector<double>& series,
                          const ScaleGrid& grid,
                          const std::vector<double>& q_values,
                          const DetrendOptions& opts = {},
                          ZeroPolicy zero_policy = ZeroPolicy::Error);

}  // namespace aicdfa
