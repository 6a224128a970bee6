#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aicdfa/returns.hpp"

namespace aicdfa {

enum class CorrelationKind { IC, AIC };

// Scalar time series of instantaneous (IC) or average instantaneous (AIC)
// cross-correlation values, one per return-panel time step.
struct CorrelationSeries {
  std::vector<double> values;
  CorrelationKind kind = CorrelationKind::AIC;
  std::size_t n_stocks = 0;
};

// IC_ij(t) = R_i(t) * R_j(t).
CorrelationSeries ic_series(const ReturnPanel& panel, const std::string& i,
                            const std::string& j);

// AIC(t) = 2/(N(N-1)) * sum_{i<j} R_i(t) R_j(t), computed in O(N) per step
// via (S^2 - Q)/(N(N-1)) with S = sum_i R_i, Q = sum_i R_i^2.
// Empty subset means all symbols.
CorrelationSeries aic_series(const ReturnPanel& panel,
                             const std::vector<std::string>& subset = {});

}  // namespace aicdfa
