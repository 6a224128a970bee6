#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aicdfa/fluctuation.hpp"
#include "aicdfa/panel.hpp"
#include "aicdfa/scaling.hpp"
#include "aicdfa/synth.hpp"

namespace aicdfa {

enum class Command {
  Validate,
  Aic,
  Dfa,
  Mfdfa,
  Fit,
  Spectrum,
  Synth,
  Pipeline
};

struct QGrid {
  double min = -2.0;
  double max = 4.0;
  double step = 0.25;

  std::vector<double> values() const;
};

struct ScaleGridParams {
  std::size_t min = 4;
  std::size_t max = 0;  // 0: series length / 4
  std::size_t count = 20;

  ScaleGrid build(std::size_t series_length) const;
};

struct RunConfig {
  Command command = Command::Validate;
  std::string input;
  std::string output_dir = ".";
  std::vector<std::size_t> intervals{1};
  std::size_t stride = 1;
  std::vector<std::string> symbols;  // empty: all
  ScaleGridParams scale_params;
  QGrid q_grid;
  int detrend_order = 1;
  Direction direction = Direction::Forward;
  ZeroPolicy zero_policy = ZeroPolicy::Error;
  std::optional<ScaleRange> fit_range;
  double regime_tol = 0.02;
  MissingPolicy missing = MissingPolicy::Strict;
  GeneratorSpec generator;
  bool plot_data = false;
  bool emit_timestamp = true;
};

// Executes the requested stage(s); returns a process exit code and writes
// artifact files under config.output_dir.
int run(const RunConfig& config);

// Full CLI entry point: parse argv into a RunConfig and run it.
int main_entry(int argc, char** argv);

// Series / fluctuation file helpers shared by subcommands and tests.
std::vector<double> read_series(const std::string& path);
void write_series(const std::vector<double>& values, const std::string& path);
void write_fluctuation_csv(const FluctuationFunction& fluct,
                           const std::string& path);
FluctuationFunction read_fluctuation_csv(const std::string& path);

}  // namespace aicdfa
