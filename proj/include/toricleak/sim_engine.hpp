#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "toricleak/constants_config.hpp"
#include "toricleak/decoder.hpp"
#include "toricleak/error_channels.hpp"
#include "toricleak/syndrome.hpp"
#include "toricleak/toric_code.hpp"

namespace toricleak {

/// Per-trial random stream. Uniform doubles take the top 53 bits.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in {0, 1, 2, 3}: bit 0 is an X flip, bit 1 a Z flip.
  int pauli() { return static_cast<int>(engine_() >> 62); }

 private:
  std::mt19937_64 engine_;
};

/// Seed of trial `index` within an experiment seeded by `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Pauli frame and leakage flag per physical site.
struct SimState {
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> z;
  std::vector<std::uint8_t> leaked;
  int round = 0;
  std::int64_t leak_events = 0;
  std::int64_t seep_events = 0;

  SimState() = default;
  explicit SimState(int num_sites) : x(num_sites, 0), z(num_sites, 0), leaked(num_sites, 0) {}
};

void apply_fault(SimState& state, int site, Fault fault, RandomStream& rng);

/// Samples and applies one channel draw to `site`.
void apply_channel(SimState& state, int site, const GateErrorChannel& channel, RandomStream& rng);

/// CNOT with frame propagation. A leaked partner hands the other qubit a
/// uniform I/X/Y/Z; then each qubit draws an independent fault.
void apply_cnot(SimState& state, int control, int target, const GateErrorChannel& channel, RandomStream& rng);

/// Outcome of measuring `site` in the basis of `type` (X-check: X basis).
/// Leaked qubits read 0. The site is reset afterwards.
std::uint8_t measure_ancilla(SimState& state, int site, CheckType type);

/// The schedules a run cycles through, with the role map needed to find the
/// data qubits afterwards.
struct CircuitSet {
  bool lrc = false;
  std::vector<CircuitSchedule> by_parity;  // one entry, or two under LRC
  RolePermutation roles;

  const CircuitSchedule& for_round(int round) const { return by_parity[lrc ? round % 2 : 0]; }
  /// Physical site of data qubit q once `rounds_done` cycles have run.
  int data_site(const ToricLayout& layout, int q, int rounds_done) const;
};

CircuitSet build_circuits(const ToricLayout& layout, bool lrc);

/// A deterministic extra fault, applied after gate `gate` of timestep `step`
/// in cycle `round` to operand `operand` (0: first qubit, 1: CNOT target).
struct FaultInjection {
  int round = 0;
  int step = 0;
  int gate = 0;
  int operand = 0;
  Fault fault = Fault::none;
};

/// One cycle. Writes 2 d^2 outcomes to `row`. X-check ancillas carry a
/// one-qubit location after preparation and before readout (their basis
/// changes); every CNOT is a two-qubit location. When the idle channel is
/// nontrivial it hits qubits left untouched by a timestep.
void run_cycle(SimState& state, const ToricLayout& layout, const CircuitSchedule& schedule, const ChannelSet& channels,
               RandomStream& rng, std::uint8_t* row, const FaultInjection* injection = nullptr);

struct TrialResult {
  LogicalFailure failure;
  std::int64_t leak_events = 0;
  std::int64_t seep_events = 0;
};

struct TrialOutput {
  SyndromeHistory history;
  DataFrame truth;
  TrialResult result;
};

/// `cycles` noisy cycles, then a perfect readout row from the data frame.
/// Data qubits still leaked at readout are assigned a random frame.
TrialOutput simulate_trial(const ToricLayout& layout, const CircuitSet& circuits, const ChannelSet& channels,
                           int cycles, std::uint64_t seed, const FaultInjection* injection = nullptr);

/// simulate_trial followed by decoding.
TrialResult run_trial(const ToricLayout& layout, const CircuitSet& circuits, const ChannelSet& channels, int cycles,
                      std::uint64_t seed, const FaultInjection* injection = nullptr);

struct ExperimentResult {
  ExperimentConfig config;
  std::int64_t trials = 0;
  std::int64_t failures = 0;  // any logical failure
  std::array<std::int64_t, 2> x_failures{0, 0};
  std::array<std::int64_t, 2> z_failures{0, 0};
  std::int64_t leak_events = 0;
  std::int64_t seep_events = 0;

  double logical_fail_rate() const;
  /// 1 - (1 - P)^(1/r).
  double per_cycle_rate() const;
  /// Binomial standard error of logical_fail_rate.
  double standard_error() const;
  double leak_events_mean() const;
};

struct RunOptions {
  int workers = 0;  // 0: OpenMP default
  /// Called from the calling thread with (trials done, total).
  std::function<void(std::int64_t, std::int64_t)> progress;
};

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace toricleak
