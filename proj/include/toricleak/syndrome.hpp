#pragma once

#include <cstdint>
#include <vector>

namespace toricleak {

/// Check outcomes, one row per round. The last row is the noiseless readout
/// computed from the final data frame, so there are (cycles + 1) rows of
/// 2 d^2 bits each (X-checks first, then Z-checks).
class SyndromeHistory {
 public:
  SyndromeHistory() = default;
  SyndromeHistory(int rounds, int checks) : rounds_(rounds), checks_(checks), bits_(rounds * checks, 0) {}

  int rounds() const { return rounds_; }
  int checks() const { return checks_; }
  std::uint8_t at(int round, int check) const { return bits_[round * checks_ + check]; }
  void set(int round, int check, std::uint8_t bit) { bits_[round * checks_ + check] = bit; }
  std::uint8_t* row(int round) { return bits_.data() + round * checks_; }
  const std::uint8_t* row(int round) const { return bits_.data() + round * checks_; }

  bool operator==(const SyndromeHistory&) const = default;

 private:
  int rounds_ = 0;
  int checks_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Accumulated Pauli error on the data qubits, indexed by data id.
struct DataFrame {
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> z;

  DataFrame() = default;
  explicit DataFrame(int num_data) : x(num_data, 0), z(num_data, 0) {}

  bool operator==(const DataFrame&) const = default;
};

}  // namespace toricleak
