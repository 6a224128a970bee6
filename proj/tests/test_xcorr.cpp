#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "aicdfa/common.hpp"
#include "aicdfa/xcorr.hpp"

using namespace aicdfa;

namespace {

ReturnPanel panel_from_normalized(std::vector<std::vector<double>> normalized) {
  ReturnPanel rp;
  rp.interval = 1;
  rp.stride = 1;
  for (std::size_t c = 0; c < normalized[0].size(); ++c)
    rp.symbols.push_back("S" + std::to_string(c));
  rp.raw = normalized;
  rp.normalized = std::move(normalized);
  return rp;
}

// O(N^2) reference: explicit sum over all pairs.
double pair_sum_aic(const std::vector<double>& row) {
  const std::size_t n = row.size();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) acc += row[i] * row[j];
  return 2.0 * acc / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace

TEST_CASE("IC of identical antipodal columns is all ones") {
  const auto rp = panel_from_normalized({{1.0, 1.0}, {-1.0, -1.0}});
  const auto ic = ic_series(rp, "S0", "S1");
  CHECK(ic.values == std::vector<double>{1.0, 1.0});
  CHECK(ic.kind == CorrelationKind::IC);
}

TEST_CASE("IC of disjoint-support columns is zero") {
  const auto rp = panel_from_normalized({{1.0, 0.0}, {0.0, 1.0}});
  CHECK(ic_series(rp, "S0", "S1").values == std::vector<double>{0.0, 0.0});
}

TEST_CASE("IC preconditions") {
  const auto rp = panel_from_normalized({{1.0, 1.0}, {1.0, 1.0}});
  CHECK_THROWS_AS(ic_series(rp, "S0", "S0"), config_error);
  CHECK_THROWS_AS(ic_series(rp, "S0", "ZZ"), data_error);
}

TEST_CASE("mean IC equals Pearson correlation of normalized columns") {
  std::mt19937_64 gen(10);
  std::normal_distribution<double> nd(0.0, 1.0);
  const std::size_t n = 128;
  std::vector<std::vector<double>> cols(n, std::vector<double>(2));
  for (auto& row : cols) {
    row[0] = nd(gen);
    row[1] = 0.3 * row[0] + nd(gen);
  }
  // standardize both columns (population convention)
  for (std::size_t c = 0; c < 2; ++c) {
    double m = 0.0, v = 0.0;
    for (auto& row : cols) m += row[c];
    m /= n;
    for (auto& row : cols) v += (row[c] - m) * (row[c] - m);
    v /= n;
    for (auto& row : cols) row[c] = (row[c] - m) / std::sqrt(v);
  }
  const auto rp = panel_from_normalized(cols);
  const auto ic = ic_series(rp, "S0", "S1");
  double mean_ic = 0.0, pearson = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mean_ic += ic.values[k];
    pearson += cols[k][0] * cols[k][1];
  }
  CHECK(std::abs(mean_ic / n - pearson / n) < 1e-12);
}

TEST_CASE("AIC with N = 2 equals IC bitwise") {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<std::vector<double>> cols(64, std::vector<double>(2));
  for (auto& row : cols)
    for (auto& v : row) v = nd(gen);
  const auto rp = panel_from_normalized(cols);
  const auto ic = ic_series(rp, "S0", "S1");
  const auto aic = aic_series(rp);
  REQUIRE(aic.values.size() == ic.values.size());
  for (std::size_t k = 0; k < ic.values.size(); ++k)
    CHECK(aic.values[k] == ic.values[k]);
}

TEST_CASE("AIC of identical columns is the squared column") {
  const auto rp = panel_from_normalized(
      {{0.5, 0.5, 0.5, 0.5}, {-2.0, -2.0, -2.0, -2.0}});
  const auto aic = aic_series(rp);
  CHECK(aic.values[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(aic.values[1] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("three-column example matches the brute-force pair sum") {
  const auto rp = panel_from_normalized({{1.0, 1.0, 0.0}, {0.0, 0.0, 2.0}});
  const auto aic = aic_series(rp);
  // pairs at t=0: 1*1 + 1*0 + 1*0 = 1, scaled by 2/(3*2)
  CHECK(pair_sum_aic({1.0, 1.0, 0.0}) == doctest::Approx(1.0 / 3.0));
  CHECK(aic.values[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(aic.n_stocks == 3);
}

TEST_CASE("O(N) identity matches explicit pair sum on random panels") {
  std::mt19937_64 gen(12);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (std::size_t n_stocks : {3u, 7u, 25u}) {
    std::vector<std::vector<double>> cols(32, std::vector<double>(n_stocks));
    for (auto& row : cols)
      for (auto& v : row) v = nd(gen);
    const auto rp = panel_from_normalized(cols);
    const auto aic = aic_series(rp);
    for (std::size_t k = 0; k < cols.size(); ++k)
      CHECK(std::abs(aic.values[k] - pair_sum_aic(cols[k])) < 1e-9);
  }
}

TEST_CASE("AIC is invariant under symbol reordering") {
  std::mt19937_64 gen(13);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<std::vector<double>> cols(16, std::vector<double>(5));
  for (auto& row : cols)
    for (auto& v : row) v = nd(gen);
  const auto rp = panel_from_normalized(cols);
  std::vector<std::string> subset{"S0", "S1", "S2", "S3", "S4"};
  const auto base = aic_series(rp, subset);
  std::mt19937_64 shuffler(99);
  for (int rep = 0; rep < 5; ++rep) {
    std::shuffle(subset.begin(), subset.end(), shuffler);
    const auto perm = aic_series(rp, subset);
    for (std::size_t k = 0; k < base.values.size(); ++k)
      CHECK(perm.values[k] == doctest::Approx(base.values[k]).epsilon(1e-12));
  }
}

TEST_CASE("AIC respects the exact lower bound -Q/(N(N-1))") {
  std::mt19937_64 gen(14);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<std::vector<double>> cols(64, std::vector<double>(6));
  for (auto& row : cols)
    for (auto& v : row) v = nd(gen);
  const auto rp = panel_from_normalized(cols);
  const auto aic = aic_series(rp);
  const double n = 6.0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    double q = 0.0;
    for (double v : cols[k]) q += v * v;
    CHECK(aic.values[k] >= -q / (n * (n - 1.0)) - 1e-12);
  }
}

TEST_CASE("AIC preconditions") {
  const auto rp = panel_from_normalized({{1.0, 1.0}, {1.0, 1.0}});
  CHECK_THROWS_AS(aic_series(rp, {"S0"}), config_error);
  CHECK_THROWS_AS(aic_series(rp, {"S0", "ZZ"}), data_error);
}
