#include <doctest.h>

#include <cmath>

#include "aicdfa/common.hpp"
#include "aicdfa/synth.hpp"

using namespace aicdfa;

namespace {

// Uncentered estimator: the process mean is zero by construction, and
// centering adds an O(n^(2H-2)) bias for long-memory series.
double sample_autocorr(const std::vector<double>& x, std::size_t lag) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    den += x[i] * x[i];
    if (i + lag < x.size()) num += x[i] * x[i + lag];
  }
  return num / den;
}

}  // namespace

TEST_CASE("generators are seed-deterministic") {
  for (auto kind : {GeneratorKind::White, GeneratorKind::Fgn}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.length = 1 << 10;
    spec.hurst = 0.7;
    spec.seed = 123;
    CHECK(generate(spec) == generate(spec));
    GeneratorSpec other = spec;
    other.seed = 124;
    CHECK(generate(spec) != generate(other));
  }
}

TEST_CASE("white noise sample mean obeys the CLT bound") {
  GeneratorSpec spec;
  spec.length = 1 << 14;
  spec.seed = 5;
  const auto x = white_noise(spec);
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(x.size())));
}

TEST_CASE("fGn with H = 0.5 is uncorrelated") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Fgn;
  spec.length = 1 << 14;
  spec.hurst = 0.5;
  spec.seed = 6;
  CHECK(std::abs(sample_autocorr(fgn(spec), 1)) < 0.03);
}

TEST_CASE("fGn lag-1 autocorrelation matches 2^(2H-1) - 1 at H = 0.8") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Fgn;
  spec.length = 1 << 14;
  spec.hurst = 0.8;
  spec.seed = 11;
  const double expected = std::pow(2.0, 2.0 * 0.8 - 1.0) - 1.0;
  CHECK(std::abs(sample_autocorr(fgn(spec), 1) - expected) < 0.03);
}

TEST_CASE("fGn sample autocovariance matches gamma(k) at small lags") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Fgn;
  spec.length = 1 << 14;
  spec.hurst = 0.7;
  spec.seed = 8;
  const auto x = fgn(spec);
  const double tol = 5.0 / std::sqrt(static_cast<double>(x.size()));
  for (std::size_t lag = 0; lag <= 5; ++lag) {
    double acov = 0.0;
    for (std::size_t i = 0; i + lag < x.size(); ++i) acov += x[i] * x[i + lag];
    acov /= static_cast<double>(x.size() - lag);
    CHECK(std::abs(acov - fgn_autocovariance(0.7, lag)) < tol);
  }
}

TEST_CASE("fGn input validation") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Fgn;
  spec.length = 1000;  // not a power of 2
  CHECK_THROWS_AS(fgn(spec), config_error);
  spec.length = 1 << 10;
  spec.hurst = 1.5;
  CHECK_THROWS_AS(fgn(spec), config_error);
  spec.hurst = 0.5;
  spec.length = 8;
  CHECK_THROWS_AS(fgn(spec), config_error);
}

TEST_CASE("symmetric cascade multiplier gives the constant series") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Cascade;
  spec.length = 64;
  spec.multiplier = 0.5;
  for (double v : binomial_cascade(spec))
    CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("two-level split pattern, hand-unrolled") {
  // Two levels with a = 0.6 give [1.44, 0.96, 0.96, 0.64]; at length 16 the
  // first four cells carry that pattern scaled by the leading (2a)^2 = 1.44
  // prefix of the outer two levels.
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Cascade;
  spec.length = 16;
  spec.multiplier = 0.6;
  const auto x = binomial_cascade(spec);
  const std::vector<double> pattern{1.44, 0.96, 0.96, 0.64};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(x[i] == doctest::Approx(1.44 * pattern[i]).epsilon(1e-12));
  double sum = 0.0;
  for (double v : x) sum += v;
  CHECK(sum == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("cascade mass conservation and randomized variant") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Cascade;
  spec.length = 1 << 10;
  spec.multiplier = 0.7;
  auto x = binomial_cascade(spec);
  double sum = 0.0;
  for (double v : x) sum += v;
  CHECK(sum == doctest::Approx(double(spec.length)).epsilon(1e-12));

  spec.randomize_orientation = true;
  spec.seed = 9;
  auto y = binomial_cascade(spec);
  CHECK(y != x);
  CHECK(y == binomial_cascade(spec));
  sum = 0.0;
  for (double v : y) sum += v;
  CHECK(sum == doctest::Approx(double(spec.length)).epsilon(1e-12));
  // same multiset of values, different orientation
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-12));
}

TEST_CASE("cascade input validation") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Cascade;
  spec.length = 48;
  CHECK_THROWS_AS(binomial_cascade(spec), config_error);
  spec.length = 64;
  spec.multiplier = 1.0;
  CHECK_THROWS_AS(binomial_cascade(spec), config_error);
}

TEST_CASE("cascade analytic degenerate and normalization points") {
  for (double q : {-2.0, 0.0, 1.0, 3.5}) {
    const auto r = cascade_analytic(q, 0.5);
    CHECK(r.tau == doctest::Approx(q - 1.0).epsilon(1e-12));
    CHECK(r.h == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.alpha == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(cascade_analytic(1.0, 0.37).tau == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cascade_analytic(2.0, 0.6).tau ==
        doctest::Approx(-std::log2(0.52)).epsilon(1e-12));
}

TEST_CASE("cascade analytic self-consistency") {
  const double a = 0.6;
  // alpha equals the central difference of tau
  for (double q : {-2.0, -0.5, 0.0, 1.0, 2.5, 4.0}) {
    const double dq = 1e-4;
    const double num =
        (cascade_analytic(q + dq, a).tau - cascade_analytic(q - dq, a).tau) /
        (2.0 * dq);
    CHECK(std::abs(cascade_analytic(q, a).alpha - num) < 1e-6);
  }
  // h(0) equals the numerical q -> 0 limit of (tau(q)+1)/q
  const double h0 = cascade_analytic(0.0, a).h;
  for (double q : {1e-6, -1e-6})
    CHECK(std::abs((cascade_analytic(q, a).tau + 1.0) / q - h0) < 1e-5);
}

TEST_CASE("generator length floor") {
  GeneratorSpec spec;
  spec.length = 8;
  CHECK_THROWS_AS(white_noise(spec), config_error);
}
