#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aicdfa/panel.hpp"

namespace aicdfa {

// Log-returns over `interval` trading days, sampled every `stride` days,
// plus the per-symbol standardized (zero mean, unit population sigma) form.
struct ReturnPanel {
  std::size_t interval = 1;
  std::size_t stride = 1;
  std::vector<std::string> symbols;
  // [time][symbol]
  std::vector<std::vector<double>> raw;
  std::vector<std::vector<double>> normalized;

  std::size_t n_steps() const { return raw.size(); }
  std::size_t n_symbols() const { return symbols.size(); }
  std::size_t symbol_index(const std::string& symbol) const;
};

// Raw part only: raw[k][i] = ln y_i(k*stride + interval) - ln y_i(k*stride).
std::vector<std::vector<double>> log_returns(const PricePanel& panel,
                                             std::size_t interval,
                                             std::size_t stride);

// Column-wise standardization with population (divide-by-n) sigma.
// `symbols` is used only for error messages and may be empty.
std::vector<std::vector<double>> normalize(
    const std::vector<std::vector<double>>& raw,
    const std::vector<std::string>& symbols = {});

ReturnPanel make_return_panel(const PricePanel& panel, std::size_t interval,
                              std::size_t stride);

}  // namespace aicdfa
