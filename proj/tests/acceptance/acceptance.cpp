// Acceptance suite: one PASS/FAIL line per criterion on stdout, progress on
// stderr. Exits 0 once every criterion has been evaluated; `--strict` exits 1
// if any criterion failed. `--only N[,M...]` restricts the run and
// `--report FILE` also writes the result lines to FILE.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toricleak/decoder.hpp"
#include "toricleak/experiment.hpp"
#include "toricleak/field_noise.hpp"
#include "toricleak/scattering.hpp"
#include "toricleak/sim_engine.hpp"

using namespace toricleak;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <typename... Args>
std::string fmtn(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void note(const std::string& s) { std::fprintf(stderr, "  %s\n", s.c_str()); }

// 1. Zeeman dephasing column.
Outcome zeeman_table() {
  const struct {
    double sigma, tau, p;
  } rows[] = {{1e-2, 1e-6, 1.93e-3},   {1e-3, 1e-6, 1.93e-5},   {1e-4, 1e-6, 1.93e-7},  {1e-5, 1e-6, 1.93e-9},
              {1e-6, 1e-6, 1.93e-11},  {1e-2, 200e-6, 0.50},    {1e-3, 200e-6, 0.39},   {1e-4, 200e-6, 7.69e-3},
              {1e-5, 200e-6, 7.75e-5}, {1e-6, 200e-6, 7.75e-7}};
  double worst = 0.0;
  for (const auto& r : rows) {
    const double p = dephasing_probability({r.sigma, 0.0, r.tau, IsotopeKind::zeeman});
    worst = std::max(worst, std::abs(p / r.p - 1.0));
  }
  return {worst <= 0.02, fmt("10 entries, worst relative deviation %.4f (limit 0.02)", worst)};
}

// 2. Hyperfine dephasing column and quartic scaling.
Outcome hyperfine_table() {
  const struct {
    double sigma, tau, p;
  } rows[] = {{1e-2, 1e-6, 1.90e-14},   {1e-3, 1e-6, 1.90e-18},   {1e-4, 1e-6, 1.90e-22},   {1e-5, 1e-6, 1.90e-26},
              {1e-6, 1e-6, 1.90e-30},   {1e-2, 200e-6, 7.62e-10}, {1e-3, 200e-6, 7.62e-14}, {1e-4, 200e-6, 7.62e-18},
              {1e-5, 200e-6, 7.62e-22}, {1e-6, 200e-6, 7.62e-26}};
  double lo = 1e300, hi = 0.0;
  for (const auto& r : rows) {
    const double p = dephasing_probability({r.sigma, 0.0, r.tau, IsotopeKind::hyperfine, kDefaultHyperfineSplitting});
    lo = std::min(lo, p / r.p);
    hi = std::max(hi, p / r.p);
  }
  double worst_q = 0.0;
  for (double sigma : {1e-6, 1e-5, 1e-4, 1e-3}) {
    const FieldNoiseParams a{sigma, 0.0, 200e-6, IsotopeKind::hyperfine, kDefaultHyperfineSplitting};
    FieldNoiseParams b = a;
    b.sigma_b_gauss = 2 * sigma;
    worst_q = std::max(worst_q, std::abs(dephasing_probability(b) / dephasing_probability(a) / 16.0 - 1.0));
  }
  const bool pass = lo > 0.5 && hi < 2.0 && worst_q <= 0.01;
  return {pass, fmtn("ratio to table in [%.3f, %.3f] (limit factor 2); quartic ratio deviation %.2e (limit 0.01)", lo,
                     hi, worst_q)};
}

// 3. Scattering structure.
Outcome scattering_table() {
  const auto h = audit_gate_scattering(IsotopeKind::hyperfine, 1e-6, 200e-6);
  const auto z = audit_gate_scattering(IsotopeKind::zeeman, 1e-6, 200e-6);
  const double leak_eq = std::max(std::abs(h.one_qubit.leakage / h.one_qubit.bitflip - 1.0),
                                  std::abs(h.two_qubit.leakage / h.two_qubit.bitflip - 1.0));
  const double rr = z.two_qubit.rayleigh / z.two_qubit.bitflip;
  const std::pair<double, double> absolute[] = {
      {h.one_qubit.bitflip, 2.42e-6},  {h.one_qubit.leakage, 2.42e-6},  {h.one_qubit.rayleigh, 1.60e-13},
      {h.two_qubit.bitflip, 6.37e-5},  {h.two_qubit.leakage, 6.37e-5},  {h.two_qubit.rayleigh, 4.21e-12},
      {z.one_qubit.bitflip, 4.8e-6},   {z.one_qubit.rayleigh, 4.88e-6}, {z.two_qubit.bitflip, 12.6e-5},
      {z.two_qubit.rayleigh, 12.6e-5}};
  double worst = 1.0;
  for (const auto& [got, want] : absolute) worst = std::max(worst, std::max(got / want, want / got));
  const bool pass = leak_eq < 1e-9 && rr >= 0.9 && rr <= 1.1 && worst < 2.0;
  return {pass, fmtn("leak/bitflip - 1 = %.1e; 174 Rayleigh/Raman = %.4f; worst absolute factor %.3f (limit 2)",
                     leak_eq, rr, worst)};
}

// 4. Blossom against exhaustive enumeration.
Outcome decoder_oracle() {
  std::mt19937_64 rng(2024);
  int mismatches = 0;
  for (int k = 0; k < 1000; ++k) {
    const int d = 3 + 2 * static_cast<int>(rng() % 3);
    const int n = 2 * (1 + static_cast<int>(rng() % 6));
    std::uniform_int_distribution<int> pos(0, d - 1), t(0, d);
    std::vector<Defect> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back({pos(rng), pos(rng), t(rng)});
    const DefectGraph g(nodes, d);
    std::vector<std::vector<int>> w(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i][j] = g.weight(i, j);
    mismatches += mwpm(g).total_weight != oracle::brute_force_matching(w);
  }
  return {mismatches == 0, fmtn("1000 instances, %d weight mismatches", mismatches)};
}

// 5. Exhaustive single-fault injection at d = 3.
Outcome single_fault_sweep() {
  const ToricLayout layout(3);
  ChannelSet silent;
  silent.one_qubit.gate_class = GateClass::one_qubit;
  silent.two_qubit.gate_class = GateClass::two_qubit;
  const int cycles = 3;

  std::int64_t pauli_trials = 0, pauli_fail = 0;
  const auto standard = build_circuits(layout, false);
  for (int r = 0; r < cycles; ++r) {
    const auto& sched = standard.for_round(r);
    for (int s = 0; s < static_cast<int>(sched.steps.size()); ++s) {
      for (int g = 0; g < static_cast<int>(sched.steps[s].gates.size()); ++g) {
        const int operands = sched.steps[s].gates[g].kind == GateKind::cnot ? 2 : 1;
        for (int op = 0; op < operands; ++op) {
          for (Fault f : {Fault::pauli_x, Fault::pauli_y, Fault::pauli_z}) {
            const FaultInjection inj{r, s, g, op, f};
            ++pauli_trials;
            pauli_fail += run_trial(layout, standard, silent, cycles, 1, &inj).failure.any();
          }
        }
      }
    }
  }

  // Leaked-partner depolarization is random, so each location is replayed
  // under many streams.
  const int streams = 64;
  std::int64_t leak_trials = 0, leak_fail = 0, locations = 0;
  const auto lrc = build_circuits(layout, true);
  for (int r = 0; r < cycles; ++r) {
    const auto& sched = lrc.for_round(r);
    for (int s = 0; s < static_cast<int>(sched.steps.size()); ++s) {
      for (int g = 0; g < static_cast<int>(sched.steps[s].gates.size()); ++g) {
        if (sched.steps[s].gates[g].kind != GateKind::cnot) continue;
        for (int op = 0; op < 2; ++op) {
          ++locations;
          const FaultInjection inj{r, s, g, op, Fault::leak};
          for (int k = 0; k < streams; ++k) {
            ++leak_trials;
            leak_fail += run_trial(layout, lrc, silent, cycles, trial_seed(77, leak_trials), &inj).failure.any();
          }
        }
      }
    }
  }
  const bool pass = pauli_fail == 0 && leak_fail == 0;
  return {pass, fmtn("standard: %lld Pauli injections, %lld failures; LRC: %lld leak locations x %d streams, %lld "
                     "failures",
                     static_cast<long long>(pauli_trials), static_cast<long long>(pauli_fail),
                     static_cast<long long>(locations), streams, static_cast<long long>(leak_fail))};
}

// 6. Depolarizing threshold crossing of per-cycle rates, d = 3 vs d = 5.
Outcome threshold() {
  const std::int64_t trials = 100000;
  std::uint64_t seed = 600;
  auto gap = [&](double p) {
    ExperimentConfig c;
    c.noise = NoiseModel::depolarizing;
    c.p_scatter = p;
    c.trials = trials;
    c.distance = 3;
    c.seed = seed++;
    const auto r3 = run_experiment(c);
    c.distance = 5;
    c.seed = seed++;
    const auto r5 = run_experiment(c);
    note(fmtn("p=%.5f  d3 per-cycle %.5f  d5 per-cycle %.5f", p, r3.per_cycle_rate(), r5.per_cycle_rate()));
    return r5.per_cycle_rate() - r3.per_cycle_rate();
  };
  double lo = 0.003, hi = 0.02;
  const double g_lo = gap(lo);
  const double g_hi = gap(hi);
  if (!(g_lo < 0.0 && g_hi > 0.0)) {
    return {false, fmtn("no sign change in [0.3%%, 2%%]: gap(0.3%%)=%.3e gap(2%%)=%.3e", g_lo, g_hi)};
  }
  for (int it = 0; it < 7; ++it) {
    const double mid = std::sqrt(lo * hi);
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  const double cross = std::sqrt(lo * hi);
  return {cross >= 0.003 && cross <= 0.02,
          fmtn("per-cycle curves cross at p = %.4f (bracket [%.4f, %.4f], required [0.003, 0.02])", cross, lo, hi)};
}

ExperimentResult point(IsotopeKind iso, bool lrc, int d, double sigma, double p, std::int64_t trials,
                       std::uint64_t seed) {
  ExperimentConfig c;
  c.isotope = iso == IsotopeKind::zeeman ? IsotopeProfile::zeeman() : IsotopeProfile::hyperfine();
  c.lrc_enabled = lrc;
  c.distance = d;
  c.sigma_b_gauss = sigma;
  c.p_scatter = p;
  c.trials = trials;
  c.seed = seed;
  return run_experiment(c);
}

// 7. Zeeman vs hyperfine-LRC crossover in field stability.
Outcome crossover() {
  const std::int64_t trials = 100000;
  double z_score[2];
  double diff[2];
  const double sigmas[2] = {1e-5, 1e-4};
  for (int k = 0; k < 2; ++k) {
    const auto z = point(IsotopeKind::zeeman, false, 5, sigmas[k], 1e-4, trials, 700 + 2 * k);
    const auto h = point(IsotopeKind::hyperfine, true, 5, sigmas[k], 1e-4, trials, 701 + 2 * k);
    diff[k] = z.logical_fail_rate() - h.logical_fail_rate();
    const double se = std::hypot(z.standard_error(), h.standard_error());
    z_score[k] = se > 0 ? diff[k] / se : (diff[k] == 0 ? 0.0 : std::copysign(INFINITY, diff[k]));
    note(fmtn("sigma=%.0e G  zeeman %.3e (%lld fails)  hyperfine-lrc %.3e (%lld fails)  z=%.2f", sigmas[k],
              z.logical_fail_rate(), static_cast<long long>(z.failures), h.logical_fail_rate(),
              static_cast<long long>(h.failures), z_score[k]));
  }
  const bool sign_change = diff[0] < 0.0 && diff[1] > 0.0;
  const bool separated = z_score[0] <= -3.0 && z_score[1] >= 3.0;
  return {sign_change && separated,
          fmtn("zeeman - hyperfine: %.2e at 10 uG (%.2f sigma), %.2e at 100 uG (%.2f sigma); need opposite signs at "
               ">= 3 sigma",
               diff[0], z_score[0], diff[1], z_score[1])};
}

// 8. Zeeman plateau at 10 uG.
Outcome plateau() {
  const std::int64_t batch = 1000000;
  const std::int64_t cap = 40000000;
  auto estimate = [&](double p, std::uint64_t seed) {
    ExperimentResult total;
    std::uint64_t s = seed;
    while (total.trials < cap) {
      const auto r = point(IsotopeKind::zeeman, false, 5, 1e-5, p, batch, s);
      s += 1000;
      total.config = r.config;
      total.trials += r.trials;
      total.failures += r.failures;
      // 100 failures puts the relative standard error near 10%.
      if (total.failures > 0 && total.standard_error() / total.logical_fail_rate() <= 0.1) break;
    }
    note(fmtn("p=%.0e  rate %.3e  (%lld / %lld)", p, total.logical_fail_rate(), static_cast<long long>(total.failures),
              static_cast<long long>(total.trials)));
    return total;
  };
  const auto low = estimate(1e-5, 800);
  const auto high = estimate(1e-4, 801);
  const double rel_low = low.failures ? low.standard_error() / low.logical_fail_rate() : INFINITY;
  const double rel_high = high.failures ? high.standard_error() / high.logical_fail_rate() : INFINITY;
  const double ratio = low.failures ? high.logical_fail_rate() / low.logical_fail_rate() : INFINITY;
  const bool precise = rel_low <= 0.1 && rel_high <= 0.1;
  const bool flat = ratio <= 1.5 && ratio >= 1.0 / 1.5;
  return {precise && flat, fmtn("rate(1e-4)/rate(1e-5) = %.2f (limit 1.5); relative errors %.3f, %.3f (limit 0.1)",
                                ratio, rel_high, rel_low)};
}

// 9. LRC d = 5 against the standard circuit at d = 3 under hyperfine noise.
Outcome lrc_suppression() {
  const std::int64_t trials = 100000;
  double worst = 1.0;
  std::string detail;
  std::uint64_t seed = 900;
  for (double p : {3e-4, 1e-3, 3e-3}) {
    const auto lrc5 = point(IsotopeKind::hyperfine, true, 5, 1e-5, p, trials, seed++);
    const auto std3 = point(IsotopeKind::hyperfine, false, 3, 1e-5, p, trials, seed++);
    const auto zee3 = point(IsotopeKind::zeeman, false, 3, 1e-5, p, trials, seed++);
    const double ratio = lrc5.logical_fail_rate() / std3.logical_fail_rate();
    worst = std::max(worst, std::max(ratio, 1.0 / ratio));
    note(fmtn("p=%.0e  hyperfine-lrc d5 %.3e  hyperfine-standard d3 %.3e  (zeeman-standard d3 %.3e)", p,
              lrc5.logical_fail_rate(), std3.logical_fail_rate(), zee3.logical_fail_rate()));
    detail += fmtn("%s%.2f", detail.empty() ? "" : ", ", ratio);
  }
  return {worst <= 3.0, "lrc-d5 / standard-d3 ratios " + detail + fmt(" (worst factor %.2f, limit 3)", worst)};
}

// 10. Determinism across worker counts and d = 7 throughput.
Outcome determinism_throughput() {
  SweepSpec small = parse_sweep(R"({"trials": 2000, "seed": 10, "distances": [3, 5],
    "circuits": ["zeeman:standard", "hyperfine:lrc"], "sigma_b_gauss": 1e-5, "p_scatter": [1e-3, 5e-3]})");
  RunOptions one, many;
  one.workers = 1;
  many.workers = 8;
  const bool identical = to_csv(run_sweep(small, one)) == to_csv(run_sweep(small, many));

  SweepSpec big = parse_sweep(R"({"trials": 10000, "seed": 20, "distances": [7],
    "circuits": ["hyperfine:lrc"], "sigma_b_gauss": 1e-5,
    "p_scatter": [1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 3e-3, 5e-3, 1e-2]})");
  const auto t0 = std::chrono::steady_clock::now();
  run_sweep(big);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {identical && secs < 600.0,
          fmtn("CSV identical for 1 and 8 workers: %s; d=7 8 points x 1e4 trials in %.1f s (limit 600)",
               identical ? "yes" : "no", secs)};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::set<int> only;
  std::FILE* report = nullptr;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0) {
      strict = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      std::string list = argv[++i];
      for (std::size_t pos = 0; pos < list.size();) {
        const auto comma = list.find(',', pos);
        only.insert(std::stoi(list.substr(pos, comma - pos)));
        pos = comma == std::string::npos ? list.size() : comma + 1;
      }
    } else if (std::strcmp(argv[i], "--report") == 0 && i + 1 < argc) {
      report = std::fopen(argv[++i], "w");
      if (!report) {
        std::fprintf(stderr, "error: cannot open %s\n", argv[i]);
        return 2;
      }
    } else {
      std::fprintf(stderr, "usage: acceptance [--strict] [--only N[,M...]] [--report FILE]\n");
      return 2;
    }
  }

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"zeeman dephasing table", zeeman_table},
      {"hyperfine dephasing table", hyperfine_table},
      {"scattering structure", scattering_table},
      {"decoder oracle equivalence", decoder_oracle},
      {"exhaustive single-fault sweep", single_fault_sweep},
      {"depolarizing threshold", threshold},
      {"zeeman/hyperfine crossover", crossover},
      {"zeeman plateau", plateau},
      {"lrc suppression", lrc_suppression},
      {"determinism and throughput", determinism_throughput},
  };

  int failed = 0;
  for (int k = 0; k < 10; ++k) {
    if (!only.empty() && !only.count(k + 1)) continue;
    std::fprintf(stderr, "[%d] %s\n", k + 1, criteria[k].first);
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = criteria[k].second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    char line[1024];
    std::snprintf(line, sizeof line, "%s  %2d  %-30s %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", k + 1,
                  criteria[k].first, o.detail.c_str(), secs);
    std::fputs(line, stdout);
    std::fflush(stdout);
    if (report) {
      std::fputs(line, report);
      std::fflush(report);
    }
  }
  std::printf("%d criteria failed\n", failed);
  if (report) {
    std::fprintf(report, "%d criteria failed\n", failed);
    std::fclose(report);
  }
  return strict && failed ? 1 : 0;
}
