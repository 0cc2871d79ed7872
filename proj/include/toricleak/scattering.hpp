#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricleak/constants_config.hpp"

namespace toricleak {

/// Raman beam parameters. `dipole_max * field_amplitude` is taken in angular
/// frequency units (hbar = 1), so coupling() is mu E_0 / 2 hbar in rad/s.
struct BeamParams {
  double wavelength_m = 355e-9;
  double waist_m = 20e-6;
  double field_amplitude = 0.0;
  double dipole_max = 1.0;

  double coupling() const { return 0.5 * dipole_max * field_amplitude; }
};

enum class LevelRole { qubit_lower, qubit_upper, leakage, other };

struct AtomicLevel {
  std::string label;
  double f = 0.0;
  double m_f = 0.0;
  LevelRole role = LevelRole::other;
  double energy = 0.0;  // rad/s above the reference level; shifts the detuning
};

/// Index of the fine-structure intermediate manifold.
enum FineLevel : std::size_t { kPHalf = 0, kPThreeHalf = 1 };

struct AtomicStructure {
  double gamma = 0.0;                   // excited-state decay rate, rad/s
  std::array<double, 2> detuning{};     // laser minus P_J transition, rad/s
  std::vector<AtomicLevel> levels;

  std::size_t qubit_lower() const;
  std::size_t qubit_upper() const;
  std::vector<std::size_t> leakage_levels() const;

  /// Detuning seen from `level` through manifold `j`.
  double detuning_from(std::size_t level, std::size_t j) const {
    return detuning[j] + levels.at(level).energy;
  }
};

/// Geometry coefficients c^{i->j}_{J,lambda}; the scattering amplitude is
/// c / Delta_J. Channels enumerate (beam, scattered polarization) pairs and
/// are summed incoherently. Entries never set are NaN and rejected on use.
class AmplitudeTable {
 public:
  AmplitudeTable() = default;
  AmplitudeTable(std::size_t num_levels, std::vector<std::string> channel_labels);

  std::size_t num_levels() const { return num_levels_; }
  std::size_t num_channels() const { return channels_.size(); }
  const std::vector<std::string>& channel_labels() const { return channels_; }

  double at(std::size_t from, std::size_t to, std::size_t j, std::size_t channel) const;
  void set(std::size_t from, std::size_t to, std::size_t j, std::size_t channel, double value);
  bool has(std::size_t from, std::size_t to) const;

  /// Coefficients of the stimulated two-photon coupling between the qubit
  /// levels, one per fine-structure manifold; used for pi-rotation calibration.
  std::array<double, 2> stimulated{};

 private:
  std::size_t index(std::size_t from, std::size_t to, std::size_t j, std::size_t channel) const;

  std::size_t num_levels_ = 0;
  std::vector<std::string> channels_;
  std::vector<double> coeff_;
};

/// Thrown when a rate is requested for a level pair absent from the table.
class StructuralError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScatteringRates {
  double raman_bitflip = 0.0;       // Gamma_01 + Gamma_10
  double leakage = 0.0;             // mean over qubit levels of the total leak rate
  double rayleigh_dephasing = 0.0;  // elastic-amplitude mismatch
};

double transition_rate(std::size_t from, std::size_t to, const BeamParams& beam,
                       const AtomicStructure& atom, const AmplitudeTable& table);
double raman_rate(std::size_t i, std::size_t j, const BeamParams& beam, const AtomicStructure& atom,
                  const AmplitudeTable& table);
double rayleigh_dephasing_rate(std::size_t i, std::size_t j, const BeamParams& beam,
                               const AtomicStructure& atom, const AmplitudeTable& table);

ScatteringRates scattering_rates(const BeamParams& beam, const AtomicStructure& atom,
                                 const AmplitudeTable& table);

/// Two-photon Rabi frequency between the qubit levels (both beams at the same
/// field amplitude).
double two_photon_rabi(const BeamParams& beam, const AtomicStructure& atom, const AmplitudeTable& table);

/// Returns `beam` with the field amplitude chosen so a pi rotation takes `tau`.
BeamParams calibrate_pi_rotation(BeamParams beam, const AtomicStructure& atom,
                                 const AmplitudeTable& table, double tau);

struct ScatteringProbabilities {
  double bitflip = 0.0;
  double leakage = 0.0;
  double rayleigh = 0.0;

  double total() const { return bitflip + leakage + rayleigh; }
};

/// p = 1 - exp(-Gamma tau area) per channel. `area` is the rotation area of
/// the gate in units of a pi pulse.
ScatteringProbabilities per_gate_scattering(const ScatteringRates& rates, double tau, double area = 1.0);

/// Default 171Yb+/174Yb+ data: 355 nm co-propagating Raman beams, B along z,
/// beams propagating at the magic angle to B with orthogonal linear
/// polarizations.
AtomicStructure default_atomic_structure(IsotopeKind kind, double laser_wavelength_m = 355e-9,
                                         double hyperfine_splitting = kDefaultHyperfineSplitting);
AmplitudeTable default_amplitude_table(IsotopeKind kind);

/// Per-gate scattering probabilities for a pi rotation in `tau`; two-qubit
/// gates are scaled by 1/`single_qubit_ratio`.
struct GateScatteringAudit {
  ScatteringProbabilities one_qubit;
  ScatteringProbabilities two_qubit;
};

GateScatteringAudit audit_gate_scattering(IsotopeKind kind, double tau_1q, double tau_2q,
                                          double single_qubit_ratio = kDefaultSingleQubitScatterRatio);

/// Fraction of Rayleigh dephasing relative to the inelastic (Raman + leak)
/// scattering for the shipped geometry.
double default_rayleigh_fraction(IsotopeKind kind);

nlohmann::json scattering_model_to_json(const AtomicStructure& atom, const AmplitudeTable& table);
void scattering_model_from_json(const nlohmann::json& doc, AtomicStructure& atom, AmplitudeTable& table);

}  // namespace toricleak
