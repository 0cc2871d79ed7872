#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "toricleak/constants_config.hpp"
#include "toricleak/sim_engine.hpp"

namespace toricleak {

/// An isotope paired with a circuit, written `zeeman:standard`, `hyperfine:lrc`.
struct CircuitChoice {
  IsotopeKind isotope = IsotopeKind::zeeman;
  bool lrc = false;

  std::string label() const;
  bool operator==(const CircuitChoice&) const = default;
};

CircuitChoice parse_circuit_choice(std::string_view text);

/// Cartesian grid of experiment points. Points are enumerated circuit-major,
/// then distance, sigma and p_scatter; point k runs with seed base.seed + k.
struct SweepSpec {
  ExperimentConfig base;
  std::vector<CircuitChoice> circuits;
  std::vector<int> distances;
  std::vector<double> sigma_b_gauss;
  std::vector<double> p_scatter;

  std::vector<ExperimentConfig> points() const;
};

/// Sweep file: the config keys, where sigma_b_gauss and p_scatter may be
/// lists, plus `distances` and `circuits` lists. Missing lists fall back to
/// the scalar value of `base`.
SweepSpec parse_sweep(std::string_view text, const ExperimentConfig& base = {});
SweepSpec load_sweep(const std::filesystem::path& path, const ExperimentConfig& base = {});

/// Throws ConfigError (before any simulation) if any point is invalid.
void validate(const SweepSpec& spec);

std::vector<ExperimentResult> run_sweep(const SweepSpec& spec, const RunOptions& options = {});

inline constexpr std::string_view kCsvHeader =
    "isotope,circuit,d,sigma_b_gauss,p_scatter,trials,cycles,logical_fail_rate,per_cycle_rate,stderr,"
    "leak_events_mean,seed";

std::string to_csv(const std::vector<ExperimentResult>& rows);
std::string to_json(const std::vector<ExperimentResult>& rows);

/// Per-gate channel table for both isotopes and both gate classes, plus the
/// scattering audit from the shipped atomic data.
std::string describe_channels(const ExperimentConfig& config);

/// Lattice, schedules and swap pairing as line-oriented text.
std::string dump_layout(int distance);

/// Matching of a `decode --graph` defect list, one pair per line.
std::string describe_matching(std::string_view defect_list);

}  // namespace toricleak
