#include <gtest/gtest.h>

#include <cmath>

#include "toricleak/scattering.hpp"

using namespace toricleak;

namespace {

bool within_factor(double value, double target, double factor) {
  return value > target / factor && value < target * factor;
}

}  // namespace

TEST(Scattering, HyperfineLeakEqualsBitflip) {
  const auto audit = audit_gate_scattering(IsotopeKind::hyperfine, 1e-6, 200e-6);
  EXPECT_NEAR(audit.two_qubit.leakage / audit.two_qubit.bitflip, 1.0, 1e-9);
  EXPECT_NEAR(audit.one_qubit.leakage / audit.one_qubit.bitflip, 1.0, 1e-9);
}

TEST(Scattering, ZeemanRayleighMatchesRaman) {
  const auto audit = audit_gate_scattering(IsotopeKind::zeeman, 1e-6, 200e-6);
  const double r = audit.two_qubit.rayleigh / audit.two_qubit.bitflip;
  EXPECT_GE(r, 0.9);
  EXPECT_LE(r, 1.1);
  EXPECT_EQ(audit.two_qubit.leakage, 0.0);
}

TEST(Scattering, AbsoluteProbabilitiesWithinFactorTwo) {
  const auto h = audit_gate_scattering(IsotopeKind::hyperfine, 1e-6, 200e-6);
  const auto z = audit_gate_scattering(IsotopeKind::zeeman, 1e-6, 200e-6);
  EXPECT_TRUE(within_factor(h.one_qubit.bitflip, 2.42e-6, 2.0)) << h.one_qubit.bitflip;
  EXPECT_TRUE(within_factor(h.one_qubit.leakage, 2.42e-6, 2.0));
  EXPECT_TRUE(within_factor(h.one_qubit.rayleigh, 1.60e-13, 2.0)) << h.one_qubit.rayleigh;
  EXPECT_TRUE(within_factor(h.two_qubit.bitflip, 6.37e-5, 2.0)) << h.two_qubit.bitflip;
  EXPECT_TRUE(within_factor(h.two_qubit.leakage, 6.37e-5, 2.0));
  EXPECT_TRUE(within_factor(h.two_qubit.rayleigh, 4.21e-12, 2.0)) << h.two_qubit.rayleigh;
  EXPECT_TRUE(within_factor(z.one_qubit.bitflip, 4.8e-6, 2.0)) << z.one_qubit.bitflip;
  EXPECT_TRUE(within_factor(z.one_qubit.rayleigh, 4.88e-6, 2.0));
  EXPECT_TRUE(within_factor(z.two_qubit.bitflip, 12.6e-5, 2.0)) << z.two_qubit.bitflip;
  EXPECT_TRUE(within_factor(z.two_qubit.rayleigh, 12.6e-5, 2.0));
}

TEST(Scattering, PiPulseProbabilityIndependentOfGateTime) {
  const auto fast = audit_gate_scattering(IsotopeKind::zeeman, 1e-6, 200e-6);
  const auto slow = audit_gate_scattering(IsotopeKind::zeeman, 10e-6, 200e-6);
  EXPECT_NEAR(fast.one_qubit.bitflip / slow.one_qubit.bitflip, 1.0, 1e-3);
}

TEST(Scattering, RamanRateRejectsDiagonal) {
  const auto atom = default_atomic_structure(IsotopeKind::hyperfine);
  const auto table = default_amplitude_table(IsotopeKind::hyperfine);
  EXPECT_THROW(raman_rate(0, 0, BeamParams{}, atom, table), std::domain_error);
}

TEST(Scattering, MissingAmplitudeIsStructuralError) {
  AmplitudeTable t(2, {"a"});
  EXPECT_THROW(t.at(0, 1, 0, 0), StructuralError);
  t.set(0, 1, 0, 0, 0.5);
  EXPECT_DOUBLE_EQ(t.at(0, 1, 0, 0), 0.5);
}

TEST(Scattering, RatesScaleWithIntensity) {
  const auto atom = default_atomic_structure(IsotopeKind::zeeman);
  const auto table = default_amplitude_table(IsotopeKind::zeeman);
  BeamParams beam;
  beam.field_amplitude = 1e9;
  const auto r1 = scattering_rates(beam, atom, table);
  beam.field_amplitude *= 2;
  const auto r2 = scattering_rates(beam, atom, table);
  EXPECT_NEAR(r2.raman_bitflip / r1.raman_bitflip, 4.0, 1e-9);
}

TEST(Scattering, ModelJsonRoundTrip) {
  const auto atom = default_atomic_structure(IsotopeKind::hyperfine);
  const auto table = default_amplitude_table(IsotopeKind::hyperfine);
  AtomicStructure atom2;
  AmplitudeTable table2;
  scattering_model_from_json(scattering_model_to_json(atom, table), atom2, table2);
  BeamParams beam;
  beam.field_amplitude = 1e9;
  const auto a = scattering_rates(beam, atom, table);
  const auto b = scattering_rates(beam, atom2, table2);
  EXPECT_DOUBLE_EQ(a.leakage, b.leakage);
  EXPECT_DOUBLE_EQ(a.raman_bitflip, b.raman_bitflip);
  EXPECT_DOUBLE_EQ(a.rayleigh_dephasing, b.rayleigh_dephasing);
}
