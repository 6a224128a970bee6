#include "aicdfa/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aicdfa/common.hpp"
#include "aicdfa/returns.hpp"
#include "aicdfa/spectrum.hpp"
#include "aicdfa/xcorr.hpp"

namespace aicdfa {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<double> QGrid::values() const {
  if (!(step > 0.0)) throw config_error("q grid step must be positive");
  if (!(max >= min)) throw config_error("q grid max must be >= min");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(
      std::llround((max - min) / step));
  for (std::size_t i = 0; i <= count; ++i) {
    double q = min + static_cast<double>(i) * step;
    if (std::abs(q) < 1e-12) q = 0.0;  // route exactly through the q=0 branch
    if (q > max + 1e-9) break;
    out.push_back(q);
  }
  if (out.empty()) throw config_error("empty q grid");
  return out;
}

ScaleGrid ScaleGridParams::build(std::size_t series_length) const {
  const std::size_t hi = max == 0 ? series_length / 4 : max;
  return ScaleGrid::log_spaced(min, hi, count);
}

namespace {

std::string format_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

const char* to_cstr(Direction d) {
  return d == Direction::Forward ? "forward" : "bidirectional";
}

const char* to_cstr(ZeroPolicy p) {
  return p == ZeroPolicy::Error ? "error" : "floor";
}

const char* to_cstr(MissingPolicy p) {
  return p == MissingPolicy::Strict ? "strict" : "drop-rows";
}

const char* to_cstr(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::White: return "white";
    case GeneratorKind::Fgn: return "fgn";
    case GeneratorKind::Cascade: return "cascade";
  }
  return "?";
}

json config_json(const RunConfig& c) {
  json j;
  j["input"] = c.input;
  j["output_dir"] = c.output_dir;
  j["intervals"] = c.intervals;
  j["stride"] = c.stride;
  j["symbols"] = c.symbols;
  j["scales"] = {{"min", c.scale_params.min},
                 {"max", c.scale_params.max},
                 {"count", c.scale_params.count}};
  j["q_grid"] = {{"min", c.q_grid.min},
                 {"max", c.q_grid.max},
                 {"step", c.q_grid.step}};
  j["detrend_order"] = c.detrend_order;
  j["direction"] = to_cstr(c.direction);
  j["zero_policy"] = to_cstr(c.zero_policy);
  if (c.fit_range)
    j["fit_range"] = {{"min", c.fit_range->min}, {"max", c.fit_range->max}};
  else
    j["fit_range"] = nullptr;
  j["regime_tol"] = c.regime_tol;
  j["missing"] = to_cstr(c.missing);
  j["seed"] = c.generator.seed;
  j["plot_data"] = c.plot_data;
  return j;
}

json fit_json(const PowerLawFit& f) {
  return json{{"exponent", f.exponent},
              {"intercept", f.intercept},
              {"fit_range", {{"min", f.fit_range.min}, {"max", f.fit_range.max}}},
              {"residual_sse", f.residual_sse},
              {"stderr", f.stderr_slope},
              {"n_points", f.n_points}};
}

json crossover_json(const CrossoverFit& c) {
  return json{{"t_c", c.t_c},
              {"left", fit_json(c.left)},
              {"right", fit_json(c.right)},
              {"single", fit_json(c.single)},
              {"preferred",
               c.preferred == ScalingModel::TwoStage ? "two-stage" : "single"},
              {"delta_bic", c.delta_bic}};
}

json spectrum_json(const MultifractalSpectrum& sp) {
  return json{{"q", sp.q_values},          {"h", sp.h},
              {"tau", sp.tau},             {"alpha", sp.alpha},
              {"f_alpha", sp.f_alpha},     {"delta_alpha", sp.delta_alpha},
              {"fractal_dim", sp.fractal_dim},
              {"delta_alpha_note",
               "width over the evaluated q grid, not extrapolated"}};
}

void write_json(const json& j, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write file: " + path.string());
  out << j.dump(2) << '\n';
}

void write_dat(const std::vector<double>& x, const std::vector<double>& y,
               const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write file: " + path.string());
  out.precision(17);
  for (std::size_t i = 0; i < x.size(); ++i)
    out << x[i] << ' ' << y[i] << '\n';
}

void write_plot_files(const FluctuationFunction& fluct, const fs::path& dir,
                      const std::string& stem) {
  std::vector<double> scales(fluct.scales.begin(), fluct.scales.end());
  for (std::size_t qi = 0; qi < fluct.q_values.size(); ++qi) {
    std::ostringstream name;
    name << stem << "_q" << fluct.q_values[qi] << ".dat";
    write_dat(scales, fluct.F[qi], dir / name.str());
  }
}

void write_spectrum_plots(const MultifractalSpectrum& sp, const fs::path& dir,
                          const std::string& stem) {
  write_dat(sp.q_values, sp.h, dir / (stem + "_hq.dat"));
  write_dat(sp.q_values, sp.tau, dir / (stem + "_tauq.dat"));
  write_dat(sp.alpha, sp.f_alpha, dir / (stem + "_falpha.dat"));
}

double pick_fit_q(const FluctuationFunction& fluct) {
  for (double q : fluct.q_values)
    if (q == 2.0) return q;
  return fluct.q_values.front();
}

json analyze_series(const std::vector<double>& series, const RunConfig& c,
                    FluctuationFunction* fluct_out) {
  const auto grid = c.scale_params.build(series.size());
  DetrendOptions opts{c.detrend_order, c.direction, true};
  auto fluct = mfdfa(series, grid, c.q_grid.values(), opts, c.zero_policy);

  json j;
  j["fluctuation"] = {{"scales", fluct.scales},
                      {"q", fluct.q_values},
                      {"n_windows", fluct.n_windows},
                      {"floored_windows", fluct.floored_windows},
                      {"F", fluct.F}};
  const double q_main = pick_fit_q(fluct);
  const auto main_fit = fit_power_law(fluct, q_main, c.fit_range);
  j["fit"] = fit_json(main_fit);
  j["fit"]["q"] = q_main;
  j["regime"] = to_string(classify_regime(main_fit.exponent, c.regime_tol));
  if (fluct.scales.size() >= 7)
    j["crossover"] = crossover_json(fit_crossover(fluct, q_main));
  else
    j["crossover"] = nullptr;
  const auto sp = make_spectrum(fluct, c.fit_range);
  j["spectrum"] = spectrum_json(sp);
  if (fluct_out) *fluct_out = std::move(fluct);
  return j;
}

int run_validate(const RunConfig& c) {
  LoadReport rep;
  const auto panel = load_panel(c.input, c.missing, &rep);
  json j{{"n_dates", panel.n_dates()},
         {"n_symbols", panel.n_symbols()},
         {"first_date", panel.dates().front()},
         {"last_date", panel.dates().back()},
         {"dropped_rows", rep.dropped_rows}};
  std::cout << j.dump(2) << '\n';
  if (rep.dropped_rows > 0)
    std::cerr << "dropped " << rep.dropped_rows << " row(s)\n";
  return kExitOk;
}

int run_aic(const RunConfig& c) {
  LoadReport rep;
  const auto panel = load_panel(c.input, c.missing, &rep);
  const auto rp = make_return_panel(panel, c.intervals.front(), c.stride);
  const auto aic = aic_series(rp, c.symbols);
  const fs::path out = fs::path(c.output_dir) /
                       ("aic_dt" + std::to_string(c.intervals.front()) + ".csv");
  std::ofstream f(out);
  if (!f) throw data_error("cannot write file: " + out.string());
  f << "index,value\n";
  f.precision(17);
  for (std::size_t i = 0; i < aic.values.size(); ++i)
    f << i << ',' << aic.values[i] << '\n';
  std::cout << out.string() << '\n';
  return kExitOk;
}

int run_dfa_like(const RunConfig& c, bool multi_q) {
  const auto series = read_series(c.input);
  const auto grid = c.scale_params.build(series.size());
  DetrendOptions opts{c.detrend_order, c.direction, true};
  const auto fluct =
      multi_q ? mfdfa(series, grid, c.q_grid.values(), opts, c.zero_policy)
              : dfa(series, grid, opts);
  const std::string stem = multi_q ? "mfdfa" : "dfa";
  const fs::path out = fs::path(c.output_dir) / (stem + ".csv");
  write_fluctuation_csv(fluct, out.string());
  if (c.plot_data) write_plot_files(fluct, c.output_dir, stem);
  std::cout << out.string() << '\n';
  return kExitOk;
}

int run_fit(const RunConfig& c) {
  const auto fluct = read_fluctuation_csv(c.input);
  const double q_main = pick_fit_q(fluct);
  const auto fit = fit_power_law(fluct, q_main, c.fit_range);
  json j;
  j["q"] = q_main;
  j["fit"] = fit_json(fit);
  j["regime"] = to_string(classify_regime(fit.exponent, c.regime_tol));
  j["crossover"] = fluct.scales.size() >= 7
                       ? crossover_json(fit_crossover(fluct, q_main))
                       : json(nullptr);
  write_json(j, fs::path(c.output_dir) / "fit.json");
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_spectrum(const RunConfig& c) {
  const auto fluct = read_fluctuation_csv(c.input);
  const auto sp = make_spectrum(fluct, c.fit_range);
  const json j = spectrum_json(sp);
  write_json(j, fs::path(c.output_dir) / "spectrum.json");
  if (c.plot_data) write_spectrum_plots(sp, c.output_dir, "spectrum");
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_synth(const RunConfig& c) {
  const auto series = generate(c.generator);
  const fs::path csv = fs::path(c.output_dir) / "synth.csv";
  write_series(series, csv.string());
  json j{{"kind", to_cstr(c.generator.kind)},
         {"length", c.generator.length},
         {"hurst", c.generator.hurst},
         {"multiplier", c.generator.multiplier},
         {"randomize_orientation", c.generator.randomize_orientation},
         {"seed", c.generator.seed},
         {"rng", "mt19937_64 + Box-Muller (53-bit uniforms)"},
         {"output", csv.string()}};
  write_json(j, fs::path(c.output_dir) / "synth.json");
  std::cout << csv.string() << '\n';
  return kExitOk;
}

int run_pipeline(const RunConfig& c) {
  LoadReport rep;
  const auto panel = load_panel(c.input, c.missing, &rep);
  for (std::size_t interval : c.intervals) {
    const auto rp = make_return_panel(panel, interval, c.stride);
    const auto aic = aic_series(rp, c.symbols);

    json report;
    report["version"] = kVersion;
    if (c.emit_timestamp) report["generated_at"] = timestamp_utc();
    report["config"] = config_json(c);
    report["interval"] = interval;
    report["n_symbols"] = aic.n_stocks;
    report["n_steps"] = aic.values.size();
    report["dropped_rows"] = rep.dropped_rows;

    FluctuationFunction fluct;
    report["analysis"] = analyze_series(aic.values, c, &fluct);

    const std::string tag = "dt" + std::to_string(interval);
    write_json(report, fs::path(c.output_dir) / ("report_" + tag + ".json"));
    if (c.plot_data) {
      write_plot_files(fluct, c.output_dir, tag);
      const auto sp = make_spectrum(fluct, c.fit_range);
      write_spectrum_plots(sp, c.output_dir, tag);
    }
  }
  return kExitOk;
}

}  // namespace

std::vector<double> read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open file: " + path);
  std::vector<double> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // Take the last comma-separated field; skip a non-numeric header row.
    const auto pos = line.find_last_of(',');
    const std::string cell =
        pos == std::string::npos ? line : line.substr(pos + 1);
    try {
      std::size_t used = 0;
      const double v = std::stod(cell, &used);
      out.push_back(v);
    } catch (const std::exception&) {
      if (first) {
        first = false;
        continue;
      }
      throw data_error("non-numeric series value: " + cell);
    }
    first = false;
  }
  if (out.empty()) throw data_error("empty series file: " + path);
  return out;
}

void write_series(const std::vector<double>& values, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write file: " + path);
  out.precision(17);
  for (double v : values) out << v << '\n';
}

void write_fluctuation_csv(const FluctuationFunction& fluct,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write file: " + path);
  out << "scale";
  for (double q : fluct.q_values) out << ",q=" << format_double(q);
  out << '\n';
  out.precision(17);
  for (std::size_t si = 0; si < fluct.scales.size(); ++si) {
    out << fluct.scales[si];
    for (std::size_t qi = 0; qi < fluct.q_values.size(); ++qi)
      out << ',' << fluct.F[qi][si];
    out << '\n';
  }
}

FluctuationFunction read_fluctuation_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw data_error("empty fluctuation file: " + path);
  FluctuationFunction fluct;
  {
    std::stringstream ss(line);
    std::string cell;
    if (!std::getline(ss, cell, ',') || cell != "scale")
      throw data_error("malformed fluctuation header (expected 'scale,...')");
    while (std::getline(ss, cell, ',')) {
      if (cell.rfind("q=", 0) != 0)
        throw data_error("malformed fluctuation header cell: " + cell);
      fluct.q_values.push_back(std::stod(cell.substr(2)));
    }
  }
  if (fluct.q_values.empty())
    throw data_error("fluctuation file has no q columns");
  fluct.F.resize(fluct.q_values.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    fluct.scales.push_back(std::stoul(cell));
    for (std::size_t qi = 0; qi < fluct.q_values.size(); ++qi) {
      if (!std::getline(ss, cell, ','))
        throw data_error("short fluctuation row in " + path);
      fluct.F[qi].push_back(std::stod(cell));
    }
  }
  if (fluct.scales.empty())
    throw data_error("fluctuation file has no rows: " + path);
  return fluct;
}

int run(const RunConfig& config) {
  const char* stage = "config";
  try {
    fs::create_directories(config.output_dir);
    switch (config.command) {
      case Command::Validate: stage = "validate"; return run_validate(config);
      case Command::Aic: stage = "aic"; return run_aic(config);
      case Command::Dfa: stage = "dfa"; return run_dfa_like(config, false);
      case Command::Mfdfa: stage = "mfdfa"; return run_dfa_like(config, true);
      case Command::Fit: stage = "fit"; return run_fit(config);
      case Command::Spectrum: stage = "spectrum"; return run_spectrum(config);
      case Command::Synth: stage = "synth"; return run_synth(config);
      case Command::Pipeline: stage = "pipeline"; return run_pipeline(config);
    }
    throw config_error("unknown command");
  } catch (const config_error& e) {
    std::cerr << "error [" << stage << "]: " << e.what() << '\n';
    return kExitConfig;
  } catch (const numerical_error& e) {
    std::cerr << "error [" << stage << "]: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const data_error& e) {
    std::cerr << "error [" << stage << "]: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error [" << stage << "]: " << e.what() << '\n';
    return kExitData;
  }
}

namespace {

void parse_colon_triple(const std::string& s, double& a, double& b, double& c) {
  std::stringstream ss(s);
  std::string cell;
  std::vector<double> vals;
  while (std::getline(ss, cell, ':')) vals.push_back(std::stod(cell));
  if (vals.size() != 3) throw CLI::ValidationError("expected MIN:MAX:STEP");
  a = vals[0];
  b = vals[1];
  c = vals[2];
}

}  // namespace

int main_entry(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Cross-correlation memory and multifractality analysis"};
  app.require_subcommand(1);

  std::string scales_arg, q_arg, fit_range_arg, direction_arg = "forward",
                                                zero_arg = "error",
                                                missing_arg = "strict",
                                                kind_arg = "white";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output-dir", cfg.output_dir, "Output directory");
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--scales", scales_arg, "Scale grid MIN:MAX:COUNT");
    sub->add_option("--detrend-order", cfg.detrend_order, "Polynomial order");
    sub->add_option("--direction", direction_arg)
        ->check(CLI::IsMember({"forward", "bidirectional"}));
    sub->add_option("--fit-range", fit_range_arg, "Fit range MIN:MAX");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Input file")->required();
  };
  auto add_panel = [&](CLI::App* sub) {
    sub->add_option("--missing", missing_arg)
        ->check(CLI::IsMember({"strict", "drop-rows"}));
  };
  auto add_returns = [&](CLI::App* sub) {
    sub->add_option("--interval", cfg.intervals,
                    "Return interval(s) in trading days")
        ->delimiter(',');
    sub->add_option("--stride", cfg.stride, "Sampling stride in days");
    sub->add_option("--symbols", cfg.symbols, "Symbol subset")->delimiter(',');
  };
  auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", q_arg, "Moment grid MIN:MAX:STEP");
    sub->add_option("--zero-policy", zero_arg)
        ->check(CLI::IsMember({"error", "floor"}));
  };

  auto* validate = app.add_subcommand("validate", "Load and check a panel");
  add_input(validate);
  add_panel(validate);
  add_common(validate);

  auto* aic = app.add_subcommand("aic", "Average instantaneous correlation");
  add_input(aic);
  add_panel(aic);
  add_returns(aic);
  add_common(aic);

  auto* dfa_cmd = app.add_subcommand("dfa", "DFA of a series file");
  add_input(dfa_cmd);
  add_analysis(dfa_cmd);
  add_common(dfa_cmd);
  dfa_cmd->add_flag("--plot-data", cfg.plot_data, "Write gnuplot .dat files");

  auto* mfdfa_cmd = app.add_subcommand("mfdfa", "MF-DFA of a series file");
  add_input(mfdfa_cmd);
  add_analysis(mfdfa_cmd);
  add_q(mfdfa_cmd);
  add_common(mfdfa_cmd);
  mfdfa_cmd->add_flag("--plot-data", cfg.plot_data);

  auto* fit = app.add_subcommand("fit", "Power-law / crossover fit");
  add_input(fit);
  add_common(fit);
  fit->add_option("--fit-range", fit_range_arg, "Fit range MIN:MAX");
  fit->add_option("--regime-tol", cfg.regime_tol, "Regime boundary tolerance");

  auto* spectrum = app.add_subcommand("spectrum", "Multifractal spectrum");
  add_input(spectrum);
  add_common(spectrum);
  spectrum->add_option("--fit-range", fit_range_arg);
  spectrum->add_flag("--plot-data", cfg.plot_data);

  auto* synth = app.add_subcommand("synth", "Synthetic series generator");
  add_common(synth);
  synth->add_option("--kind", kind_arg)
      ->check(CLI::IsMember({"white", "fgn", "cascade"}));
  synth->add_option("--length", cfg.generator.length);
  synth->add_option("--hurst", cfg.generator.hurst);
  synth->add_option("--multiplier", cfg.generator.multiplier);
  synth->add_flag("--randomize-orientation",
                  cfg.generator.randomize_orientation);
  synth->add_option("--seed", cfg.generator.seed);

  auto* pipeline = app.add_subcommand(
      "pipeline", "Prices -> AIC -> MF-DFA -> fits -> spectrum");
  add_input(pipeline);
  add_panel(pipeline);
  add_returns(pipeline);
  add_analysis(pipeline);
  add_q(pipeline);
  add_common(pipeline);
  pipeline->add_flag("--plot-data", cfg.plot_data);
  pipeline->add_option("--regime-tol", cfg.regime_tol);
  pipeline->add_option("--seed", cfg.generator.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (validate->parsed()) cfg.command = Command::Validate;
    if (aic->parsed()) cfg.command = Command::Aic;
    if (dfa_cmd->parsed()) cfg.command = Command::Dfa;
    if (mfdfa_cmd->parsed()) cfg.command = Command::Mfdfa;
    if (fit->parsed()) cfg.command = Command::Fit;
    if (spectrum->parsed()) cfg.command = Command::Spectrum;
    if (synth->parsed()) cfg.command = Command::Synth;
    if (pipeline->parsed()) cfg.command = Command::Pipeline;

    cfg.direction = direction_arg == "bidirectional" ? Direction::Bidirectional
                                                     : Direction::Forward;
    cfg.zero_policy =
        zero_arg == "floor" ? ZeroPolicy::Floor : ZeroPolicy::Error;
    cfg.missing = missing_arg == "drop-rows" ? MissingPolicy::DropRows
                                             : MissingPolicy::Strict;
    if (kind_arg == "fgn") cfg.generator.kind = GeneratorKind::Fgn;
    if (kind_arg == "cascade") cfg.generator.kind = GeneratorKind::Cascade;

    if (!scales_arg.empty()) {
      double a, b, c;
      parse_colon_triple(scales_arg, a, b, c);
      if (a < 2 || b < a || c < 1)
        throw config_error("invalid --scales " + scales_arg);
      cfg.scale_params = {static_cast<std::size_t>(a),
                          static_cast<std::size_t>(b),
                          static_cast<std::size_t>(c)};
    }
    if (!q_arg.empty()) {
      double a, b, c;
      parse_colon_triple(q_arg, a, b, c);
      if (!(c > 0.0)) throw config_error("q grid step must be positive");
      cfg.q_grid = {a, b, c};
    }
    if (!fit_range_arg.empty()) {
      std::stringstream ss(fit_range_arg);
      std::string lo, hi;
      if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':'))
        throw config_error("expected --fit-range MIN:MAX");
      cfg.fit_range = ScaleRange{std::stoul(lo), std::stoul(hi)};
    }
    for (std::size_t iv : cfg.intervals)
      if (iv == 0) throw config_error("interval must be positive");
  } catch (const std::exception& e) {
    std::cerr << "error [config]: " << e.what() << '\n';
    return kExitConfig;
  }

  return run(cfg);
}

}  // namespace aicdfa
