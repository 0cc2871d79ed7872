#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace toricleak {

enum class CheckType : std::uint8_t { x, z };
enum class Role : std::uint8_t { data, x_ancilla, z_ancilla };

/// Neighbour order used for supports: north, west, east, south.
enum Direction : int { kNorth = 0, kWest = 1, kEast = 2, kSouth = 3 };

/// Distance-d toric code on a 2d x 2d periodic grid of physical sites.
///
/// Vertex (r, c) of the primal d x d lattice sits at (2r, 2c) and hosts an
/// X-check; face (r, c) sits at (2r+1, 2c+1) and hosts a Z-check. Horizontal
/// edge h(r, c) sits at (2r, 2c+1), vertical edge v(r, c) at (2r+1, 2c); both
/// hold data qubits. Data indices: h(r, c) -> r d + c, v(r, c) -> d^2 + r d + c.
/// Check indices: X(r, c) -> r d + c, Z(r, c) -> d^2 + r d + c.
class ToricLayout {
 public:
  explicit ToricLayout(int distance);

  int distance() const { return d_; }
  int side() const { return 2 * d_; }
  int num_data() const { return 2 * d_ * d_; }
  int num_checks() const { return 2 * d_ * d_; }
  int checks_per_type() const { return d_ * d_; }
  int num_physical() const { return 4 * d_ * d_; }

  CheckType check_type(int check) const { return check < d_ * d_ ? CheckType::x : CheckType::z; }
  /// Lattice coordinates of a check (vertex or face index).
  int check_row(int check) const { return (check % (d_ * d_)) / d_; }
  int check_col(int check) const { return check % d_; }
  int check_index(CheckType type, int row, int col) const;

  int site(int i, int j) const;
  int data_home(int q) const { return data_home_[q]; }
  int check_home(int a) const { return check_home_[a]; }
  /// Data index at a site, or -1 for ancilla sites.
  int data_at(int site) const { return data_at_[site]; }
  int check_at(int site) const { return check_at_[site]; }

  /// Four data qubits of a check in north, west, east, south order.
  const std::array<int, 4>& support(int check) const { return support_[check]; }
  /// The two X-checks and two Z-checks containing a data qubit.
  const std::array<int, 4>& checks_of(int q) const { return checks_of_[q]; }

  /// Z-type logicals Zbar_k (support on data) and X-type logicals Xbar_k.
  /// Zbar_k and Xbar_k anticommute; all other pairs commute.
  std::span<const int> z_logical(int k) const { return z_logical_[k]; }
  std::span<const int> x_logical(int k) const { return x_logical_[k]; }

 private:
  int d_;
  std::vector<int> data_home_, check_home_, data_at_, check_at_;
  std::vector<std::array<int, 4>> support_, checks_of_;
  std::array<std::vector<int>, 2> z_logical_, x_logical_;
};

/// CNOT order per check type, as indices into support(): X-checks N W E S,
/// Z-checks N E W S. Simultaneous extraction commutes with this interleave.
inline constexpr std::array<int, 4> kXOrder{kNorth, kWest, kEast, kSouth};
inline constexpr std::array<int, 4> kZOrder{kNorth, kEast, kWest, kSouth};

enum class GateKind : std::uint8_t { init, cnot, measure };

/// init/measure act on `a`; cnot has control `a` and target `b`. All qubit
/// ids are physical sites. `check` names the check an init/measure serves.
struct Gate {
  GateKind kind = GateKind::cnot;
  int a = -1;
  int b = -1;
  int check = -1;

  bool operator==(const Gate&) const = default;
};

struct Timestep {
  std::vector<Gate> gates;
};

struct CircuitSchedule {
  std::vector<Timestep> steps;
  bool lrc = false;
  int parity = 0;

  std::size_t gate_count() const;
  std::size_t cnot_count() const;
};

/// Physical placement of roles for each round parity under the swap pairing.
/// Each check is paired with its south neighbour (the last CNOT partner);
/// at parity 1 the two members of every pair have traded sites.
class RolePermutation {
 public:
  RolePermutation() = default;
  explicit RolePermutation(const ToricLayout& layout);

  /// Physical partner of a site (an involution with no fixed points).
  int partner(int site) const { return partner_[site]; }
  int paired_data(int check) const { return paired_data_[check]; }
  int paired_check(int q) const { return paired_check_[q]; }

  int data_site(int q, int parity) const;
  int check_site(int a, int parity) const;
  Role role_at(int site, int parity) const;

 private:
  std::vector<int> partner_, paired_data_, paired_check_;
  std::vector<int> data_home_, check_home_;
  std::vector<Role> home_role_;
};

ToricLayout build_layout(int distance);
CircuitSchedule standard_schedule(const ToricLayout& layout);
CircuitSchedule lrc_schedule(const ToricLayout& layout, int round_parity);
RolePermutation swap_pairing(const ToricLayout& layout);

}  // namespace toricleak
