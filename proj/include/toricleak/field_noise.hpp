#pragma once

#include "toricleak/constants_config.hpp"

namespace toricleak {

/// First-order Zeeman shift of the qubit splitting, rad/s.
double zeeman_shift(double delta_b_gauss, const PhysicalConstants& k = {});

/// Second-order (Breit-Rabi) shift of the m_F = 0 clock splitting, rad/s.
/// Throws std::domain_error when `hyperfine_splitting` is not positive.
double hyperfine_shift(double delta_b_gauss, double b0_gauss, double hyperfine_splitting,
                       const PhysicalConstants& k = {});

/// Coefficient (g_J - g_I)^2 (mu_B/hbar)^2 / (2 omega), rad s^-1 G^-2.
double hyperfine_shift_coefficient(double hyperfine_splitting, const PhysicalConstants& k = {});

struct FieldNoiseParams {
  double sigma_b_gauss = 0.0;
  double b0_gauss = 0.0;
  double tau_seconds = 0.0;
  IsotopeKind kind = IsotopeKind::zeeman;
  double hyperfine_splitting = kDefaultHyperfineSplitting;  // ignored for zeeman
};

/// Accumulated relative phase over one gate as a polynomial in the field
/// deviation: phi(dB) = quadratic * dB^2 + linear * dB.
///
/// Zeeman qubits accumulate half the splitting shift of zeeman_shift() per
/// gate (each sublevel moves by half); clock qubits accumulate the full
/// differential shift of the m_F = 0 pair.
struct PhaseModel {
  double quadratic = 0.0;  // rad G^-2
  double linear = 0.0;     // rad G^-1
};

PhaseModel phase_model(const FieldNoiseParams& params, const PhysicalConstants& k = {});

/// Dephasing probability E[(1 - cos phi)/2] for a Gaussian field deviation of
/// standard deviation sigma_b, evaluated in closed form from the Gaussian
/// characteristic function of a quadratic phase. Stable down to ~1e-300.
double dephasing_probability(const FieldNoiseParams& params, const PhysicalConstants& k = {});

/// Same average for an arbitrary phase model; exposed for sampling checks.
double gaussian_dephasing(const PhaseModel& phase, double sigma_b_gauss);

/// Field at which the first-order Zeeman splitting equals `splitting` (rad/s).
double field_for_zeeman_splitting(double splitting, const PhysicalConstants& k = {});

}  // namespace toricleak
