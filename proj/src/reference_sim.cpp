#include "toricleak/reference_sim.hpp"

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "toricleak/syndrome.hpp"
#include "toricleak/toric_code.hpp"

namespace toricleak {

namespace {

using Coord = std::pair<int, int>;

struct Qubit {
  bool x = false;
  bool z = false;
  bool leaked = false;
};

struct Op {
  enum Kind { prepare, cnot, readout } kind;
  Coord a;
  Coord b;
  bool x_type = false;
};

class Reference {
 public:
  Reference(const ExperimentConfig& config, const ChannelSet& channels)
      : d_(config.distance), n_(2 * config.distance), channels_(channels), rng_(config.seed) {
    build_cycle();
  }

  bool trial(int cycles, std::int64_t& leaks) {
    state_.clear();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) state_[{i, j}] = Qubit{};
    SyndromeHistory history(cycles + 1, 2 * d_ * d_);
    for (int r = 0; r < cycles; ++r) {
      for (const auto& step : steps_) {
        std::set<Coord> busy;
        for (const Op& op : step) {
          run(op, history, r, leaks);
          busy.insert(op.a);
          if (op.kind == Op::cnot) busy.insert(op.b);
        }
        if (!channels_.idle.is_identity()) {
          for (auto& [c, q] : state_)
            if (!busy.count(c)) noise(q, channels_.idle, leaks);
        }
      }
    }
    DataFrame truth(2 * d_ * d_);
    for (auto& [c, q] : state_) {
      const auto [i, j] = c;
      if ((i + j) % 2 == 0) continue;
      if (q.leaked) {
        q.leaked = false;
        q.x = coin();
        q.z = coin();
      }
      const int idx = data_index(c);
      truth.x[idx] = q.x;
      truth.z[idx] = q.z;
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if ((i + j) % 2 != 0) continue;
        const bool x_type = i % 2 == 0;
        bool parity = false;
        for (const Coord& nb : neighbours({i, j})) parity ^= x_type ? state_[nb].z : state_[nb].x;
        history.set(cycles, check_index({i, j}), parity);
      }
    }
    const ToricLayout layout(d_);
    return decode(history, truth, layout).any();
  }

 private:
  Coord wrap(int i, int j) const { return {((i % n_) + n_) % n_, ((j % n_) + n_) % n_}; }

  std::vector<Coord> neighbours(Coord c) const {
    return {wrap(c.first - 1, c.second), wrap(c.first, c.second - 1), wrap(c.first, c.second + 1),
            wrap(c.first + 1, c.second)};
  }

  int check_index(Coord c) const {
    const auto [i, j] = c;
    return i % 2 == 0 ? (i / 2) * d_ + j / 2 : d_ * d_ + (i / 2) * d_ + j / 2;
  }

  int data_index(Coord c) const {
    const auto [i, j] = c;
    return i % 2 == 0 ? (i / 2) * d_ + j / 2 : d_ * d_ + (i / 2) * d_ + j / 2;
  }

  void build_cycle() {
    // X-checks visit north, west, east, south; Z-checks north, east, west, south.
    const int x_order[4] = {0, 1, 2, 3};
    const int z_order[4] = {0, 2, 1, 3};
    std::vector<Op> prep, meas;
    std::vector<std::vector<Op>> cnots(4);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if ((i + j) % 2 != 0) continue;
        const Coord anc{i, j};
        const bool x_type = i % 2 == 0;
        prep.push_back({Op::prepare, anc, anc, x_type});
        meas.push_back({Op::readout, anc, anc, x_type});
        const auto nb = neighbours(anc);
        for (int k = 0; k < 4; ++k) {
          const Coord q = nb[x_type ? x_order[k] : z_order[k]];
          cnots[k].push_back(x_type ? Op{Op::cnot, anc, q, true} : Op{Op::cnot, q, anc, false});
        }
      }
    }
    steps_.push_back(prep);
    for (auto& s : cnots) steps_.push_back(s);
    steps_.push_back(meas);
  }

  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

  void depolarize(Qubit& q) {
    const int k = std::uniform_int_distribution<int>(0, 3)(rng_);
    if (k == 1 || k == 2) q.x = !q.x;
    if (k == 2 || k == 3) q.z = !q.z;
  }

  void noise(Qubit& q, const GateErrorChannel& ch, std::int64_t& leaks) {
    if (ch.is_identity()) return;
    if (q.leaked) {
      if (std::bernoulli_distribution(ch.p_seep)(rng_)) {
        q.leaked = false;
        q.x = coin();
        q.z = coin();
      }
      return;
    }
    const double rest = std::max(0.0, 1.0 - ch.total_fault());
    std::discrete_distribution<int> pick({rest, ch.p_x, ch.p_y, ch.p_z, ch.p_leak});
    switch (pick(rng_)) {
      case 1: q.x = !q.x; break;
      case 2: q.x = !q.x; q.z = !q.z; break;
      case 3: q.z = !q.z; break;
      case 4: q.leaked = true; ++leaks; break;
      default: break;
    }
  }

  void run(const Op& op, SyndromeHistory& history, int round, std::int64_t& leaks) {
    Qubit& a = state_[op.a];
    switch (op.kind) {
      case Op::prepare:
        a = Qubit{};
        if (op.x_type) noise(a, channels_.one_qubit, leaks);
        break;
      case Op::readout: {
        if (op.x_type) noise(a, channels_.one_qubit, leaks);
        const bool bit = a.leaked ? false : (op.x_type ? a.z : a.x);
        history.set(round, check_index(op.a), bit);
        a = Qubit{};
        break;
      }
      case Op::cnot: {
        Qubit& b = state_[op.b];
        if (!a.leaked && !b.leaked) {
          b.x ^= a.x;
          a.z ^= b.z;
        } else if (a.leaked && !b.leaked) {
          depolarize(b);
        } else if (b.leaked && !a.leaked) {
          depolarize(a);
        }
        noise(a, channels_.two_qubit, leaks);
        noise(b, channels_.two_qubit, leaks);
        break;
      }
    }
  }

  int d_;
  int n_;
  ChannelSet channels_;
  std::mt19937_64 rng_;
  std::map<Coord, Qubit> state_;
  std::vector<std::vector<Op>> steps_;
};

}  // namespace

ReferenceResult run_reference(const ExperimentConfig& config) {
  validate(config);
  if (config.lrc_enabled) throw std::invalid_argument("the reference simulator covers the standard circuit only");
  Reference ref(config, build_channels(config));
  ReferenceResult res;
  res.trials = config.trials;
  for (std::int64_t t = 0; t < config.trials; ++t) res.failures += ref.trial(config.effective_cycles(), res.leak_events);
  return res;
}

}  // namespace toricleak
