#include "aicdfa/xcorr.hpp"

#include "aicdfa/common.hpp"

namespace aicdfa {

CorrelationSeries ic_series(const ReturnPanel& panel, const std::string& i,
                            const std::string& j) {
  if (i == j) throw config_error("IC requires two distinct symbols");
  const std::size_t ci = panel.symbol_index(i);
  const std::size_t cj = panel.symbol_index(j);
  CorrelationSeries out;
  out.kind = CorrelationKind::IC;
  out.n_stocks = 2;
  out.values.reserve(panel.n_steps());
  for (const auto& row : panel.normalized)
    out.values.push_back(row[ci] * row[cj]);
  return out;
}

CorrelationSeries aic_series(const ReturnPanel& panel,
                             const std::vector<std::string>& subset) {
  std::vector<std::size_t> cols;
  if (subset.empty()) {
    cols.resize(panel.n_symbols());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  } else {
    cols.reserve(subset.size());
    for (const auto& s : subset) cols.push_back(panel.symbol_index(s));
  }
  const std::size_t n = cols.size();
  if (n < 2) throw config_error("AIC requires at least 2 symbols");

  CorrelationSeries out;
  out.kind = CorrelationKind::AIC;
  out.n_stocks = n;
  out.values.reserve(panel.n_steps());
  const double denom = static_cast<double>(n) * static_cast<double>(n - 1);
  if (n == 2) {
    // Direct pair product so that AIC reduces to IC exactly, bit for bit.
    for (const auto& row : panel.normalized)
      out.values.push_back(row[cols[0]] * row[cols[1]]);
    return out;
  }
  for (const auto& row : panel.normalized) {
    double s = 0.0, q = 0.0;
    for (std::size_t c : cols) {
      const double r = row[c];
      s += r;
      q += r * r;
    }
    out.values.push_back((s * s - q) / denom);
  }
  return out;
}

}  // namespace aicdfa
