#include "toricleak/field_noise.hpp"

#include <cmath>
#include <stdexcept>

namespace toricleak {

double zeeman_shift(double delta_b_gauss, const PhysicalConstants& k) {
  return k.electron_g * k.bohr_magneton_over_hbar * delta_b_gauss;
}

double hyperfine_shift_coefficient(double hyperfine_splitting, const PhysicalConstants& k) {
  if (!(hyperfine_splitting > 0.0)) {
    throw std::domain_error("hyperfine shift needs a positive hyperfine splitting");
  }
  const double dg = k.electron_lande_g - k.nuclear_g;
  const double mu = k.bohr_magneton_over_hbar;
  return dg * dg * mu * mu / (2.0 * hyperfine_splitting);
}

double hyperfine_shift(double delta_b_gauss, double b0_gauss, double hyperfine_splitting,
                       const PhysicalConstants& k) {
  const double c = hyperfine_shift_coefficient(hyperfine_splitting, k);
  return c * (2.0 * b0_gauss * delta_b_gauss + delta_b_gauss * delta_b_gauss);
}

PhaseModel phase_model(const FieldNoiseParams& p, const PhysicalConstants& k) {
  if (!(p.tau_seconds > 0.0)) return {};
  if (p.kind == IsotopeKind::zeeman) {
    return {0.0, 0.5 * zeeman_shift(1.0, k) * p.tau_seconds};
  }
  const double c = hyperfine_shift_coefficient(p.hyperfine_splitting, k);
  return {c * p.tau_seconds, 2.0 * c * p.b0_gauss * p.tau_seconds};
}

double gaussian_dephasing(const PhaseModel& phase, double sigma) {
  if (!(sigma > 0.0)) return 0.0;
  // E[exp(i(a X^2 + b X))] = (1 - 2i a s^2)^(-1/2) exp(-b^2 s^2 / (2 (1 - 2i a s^2)))
  // for X ~ N(0, s^2). Work with w = log of that expectation.
  const double s2 = sigma * sigma;
  const double u = 2.0 * phase.quadratic * s2;  // z = 1 - i u
  const double norm = 1.0 + u * u;
  const double lin = phase.linear * phase.linear * s2 / 2.0;
  const double re_w = -0.25 * std::log1p(u * u) - lin / norm;
  const double im_w = 0.5 * std::atan(u) - lin * u / norm;
  // 1 - Re e^w = -expm1(Re w) cos(Im w) + 2 sin^2(Im w / 2)
  const double half = std::sin(0.5 * im_w);
  const double one_minus = -std::expm1(re_w) * std::cos(im_w) + 2.0 * half * half;
  return 0.5 * one_minus;
}

double dephasing_probability(const FieldNoiseParams& params, const PhysicalConstants& k) {
  return gaussian_dephasing(phase_model(params, k), params.sigma_b_gauss);
}

double field_for_zeeman_splitting(double splitting, const PhysicalConstants& k) {
  return splitting / zeeman_shift(1.0, k);
}

}  // namespace toricleak
