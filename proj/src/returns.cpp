#include "aicdfa/returns.hpp"

#include <algorithm>
#include <cmath>

#include "aicdfa/common.hpp"

namespace aicdfa {

std::size_t ReturnPanel::symbol_index(const std::string& symbol) const {
  auto it = std::find(symbols.begin(), symbols.end(), symbol);
  if (it == symbols.end()) throw data_error("unknown symbol: " + symbol);
  return static_cast<std::size_t>(it - symbols.begin());
}

std::vector<std::vector<double>> log_returns(const PricePanel& panel,
                                             std::size_t interval,
                                             std::size_t stride) {
  const std::size_t n = panel.n_dates();
  if (interval == 0) throw config_error("interval must be positive");
  if (stride == 0) throw config_error("stride must be positive");
  if (interval >= n)
    throw config_error("interval " + std::to_string(interval) +
                       " >= panel length " + std::to_string(n));
  const std::size_t steps = (n - 1 - interval) / stride + 1;
  std::vector<std::vector<double>> out(
      steps, std::vector<double>(panel.n_symbols()));
  for (std::size_t k = 0; k < steps; ++k) {
    const std::size_t t0 = k * stride;
    for (std::size_t i = 0; i < panel.n_symbols(); ++i)
      out[k][i] = std::log(panel.at(t0 + interval, i)) -
                  std::log(panel.at(t0, i));
  }
  return out;
}

std::vector<std::vector<double>> normalize(
    const std::vector<std::vector<double>>& raw,
    const std::vector<std::string>& symbols) {
  if (raw.empty()) throw data_error("empty return matrix");
  const std::size_t n = raw.size();
  const std::size_t m = raw[0].size();
  std::vector<std::vector<double>> out(n, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    double mean = 0.0;
    for (std::size_t k = 0; k < n; ++k) mean += raw[k][i];
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = raw[k][i] - mean;
      var += d * d;
    }
    var /= static_cast<double>(n);
    const double sigma = std::sqrt(var);
    if (sigma <= 0.0) {
      const std::string name =
          i < symbols.size() ? symbols[i] : ("column " + std::to_string(i));
      throw numerical_error("zero variance return series for " + name);
    }
    for (std::size_t k = 0; k < n; ++k) out[k][i] = (raw[k][i] - mean) / sigma;
  }
  return out;
}

ReturnPanel make_return_panel(const PricePanel& panel, std::size_t interval,
                              std::size_t stride) {
  ReturnPanel rp;
  rp.interval = interval;
  rp.stride = stride;
  rp.symbols = panel.symbols();
  rp.raw = log_returns(panel, interval, stride);
  rp.normalized = normalize(rp.raw, rp.symbols);
  return rp;
}

}  // namespace aicdfa
