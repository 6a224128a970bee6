#include "aicdfa/panel.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "aicdfa/common.hpp"

namespace aicdfa {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

PricePanel::PricePanel(std::vector<std::string> dates,
                       std::vector<std::string> symbols,
                       std::vector<std::vector<double>> prices)
    : dates_(std::move(dates)),
      symbols_(std::move(symbols)),
      prices_(std::move(prices)) {
  if (dates_.size() < 2) throw data_error("panel needs at least 2 dates");
  if (symbols_.empty()) throw data_error("panel needs at least 1 symbol");
  if (prices_.size() != dates_.size())
    throw data_error("price matrix row count does not match dates");
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_)
    if (!seen.insert(s).second) throw data_error("duplicate symbol: " + s);
  for (std::size_t i = 1; i < dates_.size(); ++i)
    if (dates_[i] <= dates_[i - 1])
      throw data_error("dates not strictly increasing at row " +
                       std::to_string(i));
  for (const auto& row : prices_) {
    if (row.size() != symbols_.size())
      throw data_error("ragged price matrix");
    for (double p : row)
      if (!(p > 0.0)) throw data_error("non-positive price");
  }
}

std::size_t PricePanel::symbol_index(const std::string& symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) throw data_error("unknown symbol: " + symbol);
  return static_cast<std::size_t>(it - symbols_.begin());
}

PricePanel load_panel(const std::string& path, MissingPolicy policy,
                      LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw data_error("empty file: " + path);
  auto header = split_csv_line(line);
  if (header.empty() || strip(header[0]) != "date")
    throw data_error("malformed header: first cell must be 'date'");
  std::vector<std::string> symbols;
  for (std::size_t i = 1; i < header.size(); ++i) {
    auto sym = strip(header[i]);
    if (sym.empty()) throw data_error("malformed header: empty symbol name");
    symbols.push_back(sym);
  }
  if (symbols.empty()) throw data_error("malformed header: no symbols");

  std::vector<std::string> dates;
  std::vector<std::vector<double>> prices;
  std::size_t dropped = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != symbols.size() + 1)
      throw data_error("row " + std::to_string(lineno) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(symbols.size() + 1));
    std::vector<double> row(symbols.size());
    bool ok = true;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      auto cell = strip(cells[i + 1]);
      if (cell.empty()) {
        if (policy == MissingPolicy::Strict)
          throw data_error("missing price at row " + std::to_string(lineno) +
                           ", symbol " + symbols[i]);
        ok = false;
        break;
      }
      double v = 0.0;
      auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || p != cell.data() + cell.size())
        throw data_error("non-numeric price '" + cell + "' at row " +
                         std::to_string(lineno));
      if (!(v > 0.0)) {
        if (policy == MissingPolicy::Strict)
          throw data_error("non-positive price at row " +
                           std::to_string(lineno) + ", symbol " + symbols[i]);
        ok = false;
        break;
      }
      row[i] = v;
    }
    if (!ok) {
      ++dropped;
      continue;
    }
    dates.push_back(strip(cells[0]));
    prices.push_back(std::move(row));
  }
  if (report) report->dropped_rows = dropped;
  if (dates.size() < 2)
    throw data_error("fewer than 2 dates after cleaning");
  return PricePanel(std::move(dates), std::move(symbols), std::move(prices));
}

void write_panel(const PricePanel& panel, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write file: " + path);
  out << "date";
  for (const auto& s : panel.symbols()) out << ',' << s;
  out << '\n';
  out.precision(17);
  for (std::size_t r = 0; r < panel.n_dates(); ++r) {
    out << panel.dates()[r];
    for (std::size_t c = 0; c < panel.n_symbols(); ++c)
      out << ',' << panel.at(r, c);
    out << '\n';
  }
}

}  // namespace aicdfa
