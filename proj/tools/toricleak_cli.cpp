#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toricleak/config_json.hpp"
#include "toricleak/experiment.hpp"

using namespace toricleak;

namespace {

struct Overrides {
  std::string config_path;
  std::optional<int> distance;
  std::optional<std::int64_t> trials;
  std::optional<double> sigma_b;
  std::optional<double> p_scatter;
  std::optional<std::string> isotope;
  bool lrc_on = false;
  bool lrc_off = false;
  std::optional<int> cycles;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> noise_model;
};

struct Output {
  std::string path;
  std::string format = "csv";
  int workers = 0;
};

void add_overrides(CLI::App* app, Overrides& o, const char* config_help) {
  app->add_option("--config", o.config_path, config_help)->check(CLI::ExistingFile);
  app->add_option("--distance", o.distance, "Code distance (odd, >= 3)");
  app->add_option("--trials", o.trials, "Monte Carlo trials per point");
  app->add_option("--sigma-b", o.sigma_b, "RMS field noise in gauss");
  app->add_option("--p-scatter", o.p_scatter, "Scattering probability per two-qubit gate");
  app->add_option("--isotope", o.isotope, "zeeman (174) or hyperfine (171)");
  app->add_flag("--lrc", o.lrc_on, "Use the leakage-reducing circuit");
  app->add_flag("--no-lrc", o.lrc_off, "Use the standard circuit");
  app->add_option("--cycles", o.cycles, "Noisy cycles per trial (default: distance)");
  app->add_option("--seed", o.seed, "Base seed");
  app->add_option("--noise-model", o.noise_model, "physical or depolarizing");
}

void add_output(CLI::App* app, Output& out) {
  app->add_option("--out", out.path, "Output file (default: stdout)");
  app->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--workers", out.workers, "Worker threads (default: all)")->check(CLI::NonNegativeNumber);
}

void apply(const Overrides& o, ExperimentConfig& c) {
  if (o.isotope) {
    const auto kind = parse_isotope(*o.isotope);
    if (kind != c.isotope.kind) c.isotope = kind == IsotopeKind::zeeman ? IsotopeProfile::zeeman() : IsotopeProfile::hyperfine();
  }
  if (o.distance) c.distance = *o.distance;
  if (o.trials) c.trials = *o.trials;
  if (o.sigma_b) c.sigma_b_gauss = *o.sigma_b;
  if (o.p_scatter) c.p_scatter = *o.p_scatter;
  if (o.lrc_on) c.lrc_enabled = true;
  if (o.lrc_off) c.lrc_enabled = false;
  if (o.cycles) c.cycles = *o.cycles;
  if (o.seed) c.seed = *o.seed;
  if (o.noise_model) c.noise = parse_noise_model(*o.noise_model);
}

ExperimentConfig resolve_config(const Overrides& o) {
  ExperimentConfig c;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    c = config_from_json(parse_json_text(buf.str()), c);
  }
  apply(o, c);
  validate(c);
  return c;
}

SweepSpec resolve_sweep(const Overrides& o) {
  SweepSpec spec;
  if (!o.config_path.empty()) {
    spec = load_sweep(o.config_path);
  } else {
    spec.circuits.push_back({spec.base.isotope.kind, spec.base.lrc_enabled});
    spec.distances = {spec.base.distance};
    spec.sigma_b_gauss = {spec.base.sigma_b_gauss};
    spec.p_scatter = {spec.base.p_scatter};
  }
  apply(o, spec.base);
  if (o.distance) spec.distances = {*o.distance};
  if (o.sigma_b) spec.sigma_b_gauss = {*o.sigma_b};
  if (o.p_scatter) spec.p_scatter = {*o.p_scatter};
  for (auto& c : spec.circuits) {
    if (o.isotope) c.isotope = spec.base.isotope.kind;
    if (o.lrc_on || o.lrc_off) c.lrc = o.lrc_on;
  }
  validate(spec);
  return spec;
}

void write_output(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw std::runtime_error("cannot write " + out.path);
  f << text;
}

RunOptions run_options(const Output& out, const std::string& label) {
  RunOptions opts;
  opts.workers = out.workers;
  opts.progress = [label](std::int64_t done, std::int64_t total) {
    std::fprintf(stderr, "\r%s %lld/%lld", label.c_str(), static_cast<long long>(done), static_cast<long long>(total));
    if (done == total) std::fputc('\n', stderr);
  };
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric code Monte Carlo under trapped-ion noise"};
  app.require_subcommand(1);

  Overrides run_o, sweep_o, chan_o;
  Output run_out, sweep_out;

  auto* run = app.add_subcommand("run", "Simulate one experiment point");
  add_overrides(run, run_o, "JSON config file");
  add_output(run, run_out);

  auto* sweep = app.add_subcommand("sweep", "Simulate a grid of points");
  add_overrides(sweep, sweep_o, "JSON sweep file");
  add_output(sweep, sweep_out);

  auto* chan = app.add_subcommand("describe-channels", "Print per-gate error channels");
  add_overrides(chan, chan_o, "JSON config file");

  int layout_distance = 0;
  auto* layout = app.add_subcommand("dump-layout", "Print lattice, schedules and pairing");
  layout->add_option("--distance", layout_distance, "Code distance")->required();

  std::string graph_path;
  auto* decode_cmd = app.add_subcommand("decode", "Match a defect list");
  decode_cmd->add_option("--graph", graph_path, "Defect list file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const ExperimentConfig config = resolve_config(run_o);
      const auto result = run_experiment(config, run_options(run_out, "trials"));
      const std::vector<ExperimentResult> rows{result};
      write_output(run_out, run_out.format == "json" ? to_json(rows) : to_csv(rows));
    } else if (sweep->parsed()) {
      const SweepSpec spec = resolve_sweep(sweep_o);
      const auto points = spec.points();
      std::vector<ExperimentResult> rows;
      for (std::size_t k = 0; k < points.size(); ++k) {
        const std::string label = "point " + std::to_string(k + 1) + "/" + std::to_string(points.size());
        rows.push_back(run_experiment(points[k], run_options(sweep_out, label)));
      }
      write_output(sweep_out, sweep_out.format == "json" ? to_json(rows) : to_csv(rows));
    } else if (chan->parsed()) {
      std::cout << describe_channels(resolve_config(chan_o));
    } else if (layout->parsed()) {
      std::cout << dump_layout(layout_distance);
    } else if (decode_cmd->parsed()) {
      std::ifstream in(graph_path);
      std::stringstream buf;
      buf << in.rdbuf();
      std::cout << describe_matching(buf.str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
