#pragma once

#include <cstdint>
#include <cstddef>
#include <random>
#include <vector>

namespace aicdfa {

enum class GeneratorKind { White, Fgn, Cascade };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::White;
  std::size_t length = 1u << 14;
  double hurst = 0.5;       // fgn only, in (0,1)
  double multiplier = 0.6;  // cascade only, in (0,1)
  bool randomize_orientation = false;  // cascade: seeded pair swaps
  std::uint64_t seed = 0;
};

// Deterministic standard-normal source: mt19937_64 seeded directly,
// 53-bit uniforms from the top bits, Box-Muller transform. Bit-stable
// across platforms for a given seed.
class NormalRng {
 public:
  explicit NormalRng(std::uint64_t seed) : engine_(seed) {}
  double next();
  double next_uniform();  // in (0,1)
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::vector<double> white_noise(const GeneratorSpec& spec);

// Exact fGn synthesis by circulant embedding of the autocovariance
// gamma(k) = 0.5 (|k+1|^2H - 2|k|^2H + |k-1|^2H). Length must be a power
// of 2; fails if the embedding has eigenvalues below -1e-8.
std::vector<double> fgn(const GeneratorSpec& spec);

double fgn_autocovariance(double hurst, std::size_t lag);

// Binomial multiplicative cascade of length 2^m: each level replaces x by
// (2a x, 2(1-a) x); mass (series sum) equals the length exactly.
std::vector<double> binomial_cascade(const GeneratorSpec& spec);

struct CascadeAnalytic {
  double h = 0.0;
  double tau = 0.0;
  double alpha = 0.0;
};

// Closed-form cascade exponents: tau(q) = -log2(a^q + (1-a)^q),
// h(q) = (tau(q)+1)/q with the analytic q -> 0 limit, alpha(q) = dtau/dq.
CascadeAnalytic cascade_analytic(double q, double a);

std::vector<double> generate(const GeneratorSpec& spec);

}  // namespace aicdfa
