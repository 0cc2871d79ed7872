#include "toricleak/sim_engine.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace toricleak {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

void apply_fault(SimState& s, int site, Fault fault, RandomStream& rng) {
  switch (fault) {
    case Fault::none: break;
    case Fault::pauli_x: s.x[site] ^= 1; break;
    case Fault::pauli_y: s.x[site] ^= 1; s.z[site] ^= 1; break;
    case Fault::pauli_z: s.z[site] ^= 1; break;
    case Fault::leak:
      if (!s.leaked[site]) {
        s.leaked[site] = 1;
        ++s.leak_events;
      }
      break;
    case Fault::seep:
      if (s.leaked[site]) {
        s.leaked[site] = 0;
        ++s.seep_events;
        const int p = rng.pauli();
        s.x[site] = p & 1;
        s.z[site] = (p >> 1) & 1;
      }
      break;
  }
}

void apply_channel(SimState& s, int site, const GateErrorChannel& ch, RandomStream& rng) {
  if (ch.is_identity()) return;
  apply_fault(s, site, sample_fault(ch, s.leaked[site] != 0, rng.uniform()), rng);
}

void apply_cnot(SimState& s, int c, int t, const GateErrorChannel& ch, RandomStream& rng) {
  const bool lc = s.leaked[c] != 0;
  const bool lt = s.leaked[t] != 0;
  if (!lc && !lt) {
    s.x[t] ^= s.x[c];
    s.z[c] ^= s.z[t];
  } else if (lc != lt) {
    const int victim = lc ? t : c;
    const int p = rng.pauli();
    s.x[victim] ^= p & 1;
    s.z[victim] ^= (p >> 1) & 1;
  }
  apply_channel(s, c, ch, rng);
  apply_channel(s, t, ch, rng);
}

std::uint8_t measure_ancilla(SimState& s, int site, CheckType type) {
  std::uint8_t outcome = 0;
  if (!s.leaked[site]) outcome = type == CheckType::x ? s.z[site] : s.x[site];
  s.x[site] = s.z[site] = 0;
  s.leaked[site] = 0;
  return outcome;
}

int CircuitSet::data_site(const ToricLayout& layout, int q, int rounds_done) const {
  return lrc ? roles.data_site(q, rounds_done % 2) : layout.data_home(q);
}

CircuitSet build_circuits(const ToricLayout& layout, bool lrc) {
  CircuitSet set;
  set.lrc = lrc;
  set.roles = swap_pairing(layout);
  if (lrc) {
    set.by_parity.push_back(lrc_schedule(layout, 0));
    set.by_parity.push_back(lrc_schedule(layout, 1));
  } else {
    set.by_parity.push_back(standard_schedule(layout));
  }
  return set;
}

void run_cycle(SimState& s, const ToricLayout& layout, const CircuitSchedule& schedule, const ChannelSet& channels,
               RandomStream& rng, std::uint8_t* row, const FaultInjection* injection) {
  const bool idle_noise = !channels.idle.is_identity();
  std::vector<std::uint8_t> touched;
  if (idle_noise) touched.resize(s.x.size());

  for (int step = 0; step < static_cast<int>(schedule.steps.size()); ++step) {
    const auto& gates = schedule.steps[step].gates;
    if (idle_noise) std::fill(touched.begin(), touched.end(), 0);
    for (int g = 0; g < static_cast<int>(gates.size()); ++g) {
      const Gate& gate = gates[g];
      switch (gate.kind) {
        case GateKind::init:
          s.x[gate.a] = s.z[gate.a] = 0;
          s.leaked[gate.a] = 0;
          if (layout.check_type(gate.check) == CheckType::x) apply_channel(s, gate.a, channels.one_qubit, rng);
          break;
        case GateKind::cnot:
          apply_cnot(s, gate.a, gate.b, channels.two_qubit, rng);
          break;
        case GateKind::measure: {
          const CheckType type = layout.check_type(gate.check);
          if (type == CheckType::x) apply_channel(s, gate.a, channels.one_qubit, rng);
          if (injection && injection->round == s.round && injection->step == step && injection->gate == g) {
            apply_fault(s, gate.a, injection->fault, rng);
          }
          row[gate.check] = measure_ancilla(s, gate.a, type);
          break;
        }
      }
      if (gate.kind != GateKind::measure && injection && injection->round == s.round && injection->step == step &&
          injection->gate == g) {
        apply_fault(s, injection->operand == 0 ? gate.a : gate.b, injection->fault, rng);
      }
      if (idle_noise) {
        touched[gate.a] = 1;
        if (gate.b >= 0) touched[gate.b] = 1;
      }
    }
    if (idle_noise) {
      for (int site = 0; site < static_cast<int>(touched.size()); ++site)
        if (!touched[site]) apply_channel(s, site, channels.idle, rng);
    }
  }
  ++s.round;
}

TrialOutput simulate_trial(const ToricLayout& layout, const CircuitSet& circuits, const ChannelSet& channels,
                           int cycles, std::uint64_t seed, const FaultInjection* injection) {
  RandomStream rng(seed);
  SimState s(layout.num_physical());
  TrialOutput out;
  out.history = SyndromeHistory(cycles + 1, layout.num_checks());
  for (int r = 0; r < cycles; ++r) {
    run_cycle(s, layout, circuits.for_round(r), channels, rng, out.history.row(r), injection);
  }

  out.truth = DataFrame(layout.num_data());
  for (int q = 0; q < layout.num_data(); ++q) {
    const int site = circuits.data_site(layout, q, cycles);
    if (s.leaked[site]) {
      const int p = rng.pauli();
      out.truth.x[q] = p & 1;
      out.truth.z[q] = (p >> 1) & 1;
    } else {
      out.truth.x[q] = s.x[site];
      out.truth.z[q] = s.z[site];
    }
  }
  std::uint8_t* last = out.history.row(cycles);
  for (int a = 0; a < layout.num_checks(); ++a) {
    const auto& bits = layout.check_type(a) == CheckType::x ? out.truth.z : out.truth.x;
    std::uint8_t parity = 0;
    for (int q : layout.support(a)) parity ^= bits[q];
    last[a] = parity;
  }
  out.result.leak_events = s.leak_events;
  out.result.seep_events = s.seep_events;
  return out;
}

TrialResult run_trial(const ToricLayout& layout, const CircuitSet& circuits, const ChannelSet& channels, int cycles,
                      std::uint64_t seed, const FaultInjection* injection) {
  TrialOutput out = simulate_trial(layout, circuits, channels, cycles, seed, injection);
  out.result.failure = decode(out.history, out.truth, layout);
  return out.result;
}

double ExperimentResult::logical_fail_rate() const {
  return trials > 0 ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
}

double ExperimentResult::per_cycle_rate() const {
  const double p = logical_fail_rate();
  const int r = config.effective_cycles();
  if (p >= 1.0) return 1.0;
  return -std::expm1(std::log1p(-p) / r);
}

double ExperimentResult::standard_error() const {
  if (trials <= 0) return 0.0;
  const double p = logical_fail_rate();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

double ExperimentResult::leak_events_mean() const {
  return trials > 0 ? static_cast<double>(leak_events) / static_cast<double>(trials) : 0.0;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  validate(config);
  const ToricLayout layout(config.distance);
  const CircuitSet circuits = build_circuits(layout, config.lrc_enabled);
  const ChannelSet channels = build_channels(config);
  const int cycles = config.effective_cycles();

  ExperimentResult res;
  res.config = config;
  res.trials = config.trials;

  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
  const std::int64_t chunk = std::max<std::int64_t>(256, 64 * workers);
  for (std::int64_t begin = 0; begin < config.trials; begin += chunk) {
    const std::int64_t end = std::min(config.trials, begin + chunk);
    std::int64_t fail = 0, x0 = 0, x1 = 0, z0 = 0, z1 = 0, leaks = 0, seeps = 0;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16) \
    reduction(+ : fail, x0, x1, z0, z1, leaks, seeps)
    for (std::int64_t i = begin; i < end; ++i) {
      const TrialResult t = run_trial(layout, circuits, channels, cycles, trial_seed(config.seed, i));
      fail += t.failure.any();
      x0 += t.failure.x[0];
      x1 += t.failure.x[1];
      z0 += t.failure.z[0];
      z1 += t.failure.z[1];
      leaks += t.leak_events;
      seeps += t.seep_events;
    }
    res.failures += fail;
    res.x_failures[0] += x0;
    res.x_failures[1] += x1;
    res.z_failures[0] += z0;
    res.z_failures[1] += z1;
    res.leak_events += leaks;
    res.seep_events += seeps;
    if (options.progress) options.progress(end, config.trials);
  }
  return res;
}

}  // namespace toricleak
