#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "toricleak/constants_config.hpp"

namespace toricleak {

enum class GateClass : std::uint8_t { one_qubit, two_qubit, idle };

std::string_view to_string(GateClass gate_class);

/// Stochastic per-qubit error channel applied after a gate.
struct GateErrorChannel {
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;
  double p_leak = 0.0;
  double p_seep = 0.0;  // per gate, for a qubit that is currently leaked
  GateClass gate_class = GateClass::idle;

  double total_fault() const { return p_x + p_y + p_z + p_leak; }
  bool is_identity() const { return total_fault() == 0.0 && p_seep == 0.0; }

  bool operator==(const GateErrorChannel&) const = default;
};

class ChannelError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws ChannelError if a probability is outside [0, 1] or the fault sum exceeds one.
void validate(const GateErrorChannel& channel);

struct ChannelOptions {
  /// Single-qubit gate scattering relative to the two-qubit gate.
  double single_qubit_ratio = kDefaultSingleQubitScatterRatio;
  /// Seepage override; when unset a leaked qubit returns with probability p_leak.
  std::optional<double> seepage_probability;
  /// Rayleigh dephasing per unit inelastic scattering for the hyperfine
  /// isotope. Negative selects the value computed from the shipped geometry.
  double hyperfine_rayleigh_fraction = -1.0;
};

/// Builds the channel for one gate class from the two-qubit-gate scattering
/// probability `p_scatter` and the field-noise dephasing `p_dephase` already
/// evaluated at that gate's duration.
///
/// zeeman:    Z : X : Y = 2 : 1 : 1 for scattering, plus p_dephase on Z.
/// hyperfine: leak : X : Y = 2 : 1 : 1, Rayleigh and p_dephase on Z.
/// Idle locations carry the identity channel.
GateErrorChannel build_channel(const IsotopeProfile& isotope, double p_scatter, double p_dephase,
                               GateClass gate_class, const ChannelOptions& options = {});

/// Independent single-qubit depolarizing noise, X = Y = Z = p/3.
GateErrorChannel depolarizing_channel(double p, GateClass gate_class = GateClass::two_qubit);

enum class Fault : std::uint8_t { none, pauli_x, pauli_y, pauli_z, leak, seep };

std::string_view to_string(Fault fault);

/// Maps a uniform draw in [0, 1) to a fault. Leaked qubits can only seep.
inline Fault sample_fault(const GateErrorChannel& ch, bool leaked, double u) {
  if (leaked) return u < ch.p_seep ? Fault::seep : Fault::none;
  if (u < ch.p_x) return Fault::pauli_x;
  u -= ch.p_x;
  if (u < ch.p_y) return Fault::pauli_y;
  u -= ch.p_y;
  if (u < ch.p_z) return Fault::pauli_z;
  u -= ch.p_z;
  if (u < ch.p_leak) return Fault::leak;
  return Fault::none;
}

/// The per-gate channels used by one experiment point.
struct ChannelSet {
  GateErrorChannel one_qubit;
  GateErrorChannel two_qubit;
  GateErrorChannel idle;
  double p_dephase_2q = 0.0;  // field-noise part of two_qubit.p_z
  double p_dephase_1q = 0.0;
};

ChannelSet build_channels(const ExperimentConfig& config, const PhysicalConstants& k = {});

}  // namespace toricleak
