#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace aicdfa {

enum class MissingPolicy { Strict, DropRows };

// Rectangular, gap-free date x symbol matrix of strictly positive daily
// closing prices. Dates are carried for reporting; analysis treats rows as
// evenly spaced trading-day steps.
class PricePanel {
 public:
  PricePanel(std::vector<std::string> dates, std::vector<std::string> symbols,
             std::vector<std::vector<double>> prices);

  const std::vector<std::string>& dates() const { return dates_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t n_dates() const { return dates_.size(); }
  std::size_t n_symbols() const { return symbols_.size(); }

  // prices()[row][col], row indexes dates, col indexes symbols.
  const std::vector<std::vector<double>>& prices() const { return prices_; }
  double at(std::size_t row, std::size_t col) const { return prices_[row][col]; }

  std::size_t symbol_index(const std::string& symbol) const;

  bool operator==(const PricePanel& other) const = default;

 private:
  std::vector<std::string> dates_;
  std::vector<std::string> symbols_;
  std::vector<std::vector<double>> prices_;
};

struct LoadReport {
  std::size_t dropped_rows = 0;
};

PricePanel load_panel(const std::string& path, MissingPolicy policy,
                      LoadReport* report = nullptr);

// Canonical wide CSV writer, inverse of load_panel for complete panels.
void write_panel(const PricePanel& panel, const std::string& path);

}  // namespace aicdfa
