#include "toricleak/toric_code.hpp"

#include <stdexcept>
#include <string>

namespace toricleak {

namespace {

constexpr std::array<std::array<int, 2>, 4> kOffset{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};

}  // namespace

ToricLayout::ToricLayout(int distance) : d_(distance) {
  if (distance < 3 || distance % 2 == 0) {
    throw std::invalid_argument("toric layout distance must be odd and at least 3, got " + std::to_string(distance));
  }
  const int d = d_;
  const int n_sites = num_physical();
  data_at_.assign(n_sites, -1);
  check_at_.assign(n_sites, -1);
  data_home_.resize(num_data());
  check_home_.resize(num_checks());

  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const int h = r * d + c;
      const int v = d * d + r * d + c;
      data_home_[h] = site(2 * r, 2 * c + 1);
      data_home_[v] = site(2 * r + 1, 2 * c);
      check_home_[check_index(CheckType::x, r, c)] = site(2 * r, 2 * c);
      check_home_[check_index(CheckType::z, r, c)] = site(2 * r + 1, 2 * c + 1);
    }
  }
  for (int q = 0; q < num_data(); ++q) data_at_[data_home_[q]] = q;
  for (int a = 0; a < num_checks(); ++a) check_at_[check_home_[a]] = a;

  support_.resize(num_checks());
  checks_of_.assign(num_data(), {-1, -1, -1, -1});
  std::vector<int> x_seen(num_data(), 0), z_seen(num_data(), 0);
  for (int a = 0; a < num_checks(); ++a) {
    const int home = check_home_[a];
    const int i = home / side();
    const int j = home % side();
    for (int dir = 0; dir < 4; ++dir) {
      const int q = data_at_[site(i + kOffset[dir][0], j + kOffset[dir][1])];
      support_[a][dir] = q;
      if (check_type(a) == CheckType::x) {
        checks_of_[q][x_seen[q]++] = a;
      } else {
        checks_of_[q][2 + z_seen[q]++] = a;
      }
    }
  }

  for (int k = 0; k < d; ++k) {
    z_logical_[0].push_back(0 * d + k);       // h(0, k): primal row
    x_logical_[0].push_back(k * d + 0);       // h(k, 0): dual column
    z_logical_[1].push_back(d * d + k * d);   // v(k, 0): primal column
    x_logical_[1].push_back(d * d + k);       // v(0, k): dual row
  }
}

int ToricLayout::check_index(CheckType type, int row, int col) const {
  const int r = ((row % d_) + d_) % d_;
  const int c = ((col % d_) + d_) % d_;
  return (type == CheckType::x ? 0 : d_ * d_) + r * d_ + c;
}

int ToricLayout::site(int i, int j) const {
  const int s = side();
  i = ((i % s) + s) % s;
  j = ((j % s) + s) % s;
  return i * s + j;
}

std::size_t CircuitSchedule::gate_count() const {
  std::size_t n = 0;
  for (const auto& step : steps) n += step.gates.size();
  return n;
}

std::size_t CircuitSchedule::cnot_count() const {
  std::size_t n = 0;
  for (const auto& step : steps)
    for (const auto& g : step.gates) n += g.kind == GateKind::cnot;
  return n;
}

RolePermutation::RolePermutation(const ToricLayout& layout) {
  partner_.assign(layout.num_physical(), -1);
  data_home_.resize(layout.num_data());
  check_home_.resize(layout.num_checks());
  home_role_.assign(layout.num_physical(), Role::data);
  for (int q = 0; q < layout.num_data(); ++q) data_home_[q] = layout.data_home(q);
  for (int a = 0; a < layout.num_checks(); ++a) {
    check_home_[a] = layout.check_home(a);
    home_role_[check_home_[a]] = layout.check_type(a) == CheckType::x ? Role::x_ancilla : Role::z_ancilla;
  }
  paired_data_.resize(layout.num_checks());
  paired_check_.assign(layout.num_data(), -1);
  for (int a = 0; a < layout.num_checks(); ++a) {
    const int q = layout.support(a)[kSouth];
    if (paired_check_[q] != -1) throw std::logic_error("swap pairing is not a perfect matching");
    paired_data_[a] = q;
    paired_check_[q] = a;
    partner_[layout.check_home(a)] = layout.data_home(q);
    partner_[layout.data_home(q)] = layout.check_home(a);
  }
}

int RolePermutation::data_site(int q, int parity) const {
  return (parity & 1) ? check_home_[paired_check_[q]] : data_home_[q];
}

int RolePermutation::check_site(int a, int parity) const {
  return (parity & 1) ? data_home_[paired_data_[a]] : check_home_[a];
}

Role RolePermutation::role_at(int site, int parity) const {
  return home_role_[(parity & 1) ? partner_[site] : site];
}

ToricLayout build_layout(int distance) { return ToricLayout(distance); }

RolePermutation swap_pairing(const ToricLayout& layout) { return RolePermutation(layout); }

namespace {

CircuitSchedule build_schedule(const ToricLayout& layout, bool lrc, int parity) {
  const RolePermutation roles(layout);
  auto check_site = [&](int a) { return lrc ? roles.check_site(a, parity) : layout.check_home(a); };
  auto data_site = [&](int q) { return lrc ? roles.data_site(q, parity) : layout.data_home(q); };

  CircuitSchedule s;
  s.lrc = lrc;
  s.parity = lrc ? (parity & 1) : 0;

  Timestep init;
  for (int a = 0; a < layout.num_checks(); ++a) init.gates.push_back({GateKind::init, check_site(a), -1, a});
  s.steps.push_back(std::move(init));

  for (int k = 0; k < 4; ++k) {
    Timestep step;
    for (int a = 0; a < layout.num_checks(); ++a) {
      const bool is_x = layout.check_type(a) == CheckType::x;
      const int q = layout.support(a)[is_x ? kXOrder[k] : kZOrder[k]];
      const int anc = check_site(a);
      const int dat = data_site(q);
      // The final extraction CNOT fuses with the leading CNOT of the swap.
      const bool fused = lrc && k == 3;
      const bool anc_controls = is_x != fused;
      step.gates.push_back(anc_controls ? Gate{GateKind::cnot, anc, dat, -1} : Gate{GateKind::cnot, dat, anc, -1});
    }
    s.steps.push_back(std::move(step));
  }

  if (lrc) {
    Timestep swap_tail;
    for (int a = 0; a < layout.num_checks(); ++a) {
      const bool is_x = layout.check_type(a) == CheckType::x;
      const int anc = check_site(a);
      const int dat = data_site(roles.paired_data(a));
      swap_tail.gates.push_back(is_x ? Gate{GateKind::cnot, anc, dat, -1} : Gate{GateKind::cnot, dat, anc, -1});
    }
    s.steps.push_back(std::move(swap_tail));
  }

  Timestep measure;
  for (int a = 0; a < layout.num_checks(); ++a) {
    // After the swap the syndrome sits where the paired data qubit was.
    const int where = lrc ? data_site(roles.paired_data(a)) : check_site(a);
    measure.gates.push_back({GateKind::measure, where, -1, a});
  }
  s.steps.push_back(std::move(measure));
  return s;
}

}  // namespace

CircuitSchedule standard_schedule(const ToricLayout& layout) { return build_schedule(layout, false, 0); }

CircuitSchedule lrc_schedule(const ToricLayout& layout, int round_parity) {
  return build_schedule(layout, true, round_parity);
}

}  // namespace toricleak
