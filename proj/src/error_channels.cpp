#include "toricleak/error_channels.hpp"

#include <string>

#include "toricleak/field_noise.hpp"
#include "toricleak/scattering.hpp"

namespace toricleak {

std::string_view to_string(GateClass gate_class) {
  switch (gate_class) {
    case GateClass::one_qubit: return "one_qubit";
    case GateClass::two_qubit: return "two_qubit";
    case GateClass::idle: break;
  }
  return "idle";
}

std::string_view to_string(Fault fault) {
  switch (fault) {
    case Fault::none: return "none";
    case Fault::pauli_x: return "X";
    case Fault::pauli_y: return "Y";
    case Fault::pauli_z: return "Z";
    case Fault::leak: return "leak";
    case Fault::seep: return "seep";
  }
  return "?";
}

void validate(const GateErrorChannel& ch) {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  const std::pair<const char*, double> fields[] = {
      {"p_x", ch.p_x}, {"p_y", ch.p_y}, {"p_z", ch.p_z}, {"p_leak", ch.p_leak}, {"p_seep", ch.p_seep}};
  for (const auto& [name, value] : fields) {
    if (!in_unit(value)) throw ChannelError(std::string(name) + " = " + std::to_string(value) + " is outside [0, 1]");
  }
  if (ch.total_fault() > 1.0) {
    throw ChannelError("p_x + p_y + p_z + p_leak = " + std::to_string(ch.total_fault()) + " exceeds 1");
  }
}

GateErrorChannel build_channel(const IsotopeProfile& isotope, double p_scatter, double p_dephase, GateClass gate_class,
                               const ChannelOptions& options) {
  if (!(p_scatter >= 0.0 && p_scatter <= 1.0)) {
    throw ChannelError("p_scatter = " + std::to_string(p_scatter) + " is outside [0, 1]");
  }
  if (!(p_dephase >= 0.0 && p_dephase <= 1.0)) {
    throw ChannelError("p_dephase = " + std::to_string(p_dephase) + " is outside [0, 1]");
  }
  GateErrorChannel ch;
  ch.gate_class = gate_class;
  if (gate_class == GateClass::idle) return ch;

  const double p = gate_class == GateClass::one_qubit ? p_scatter * options.single_qubit_ratio : p_scatter;
  if (isotope.kind == IsotopeKind::zeeman) {
    ch.p_x = p / 4.0;
    ch.p_y = p / 4.0;
    ch.p_z = p / 2.0 + p_dephase;
  } else {
    const double rayleigh = options.hyperfine_rayleigh_fraction >= 0.0
                                ? options.hyperfine_rayleigh_fraction
                                : default_rayleigh_fraction(IsotopeKind::hyperfine);
    ch.p_x = p / 4.0;
    ch.p_y = p / 4.0;
    ch.p_leak = p / 2.0;
    ch.p_z = rayleigh * p + p_dephase;
    ch.p_seep = options.seepage_probability.value_or(ch.p_leak);
  }
  if (ch.total_fault() > 1.0) {
    throw ChannelError("p_scatter = " + std::to_string(p_scatter) + " with p_dephase = " + std::to_string(p_dephase) +
                       " gives total fault probability above 1");
  }
  validate(ch);
  return ch;
}

GateErrorChannel depolarizing_channel(double p, GateClass gate_class) {
  GateErrorChannel ch;
  ch.gate_class = gate_class;
  if (gate_class == GateClass::idle) return ch;
  ch.p_x = ch.p_y = ch.p_z = p / 3.0;
  validate(ch);
  return ch;
}

ChannelSet build_channels(const ExperimentConfig& config, const PhysicalConstants& k) {
  ChannelSet set;
  if (config.noise == NoiseModel::depolarizing) {
    set.two_qubit = depolarizing_channel(config.p_scatter, GateClass::two_qubit);
    set.one_qubit = depolarizing_channel(config.p_scatter * config.single_qubit_scatter_ratio, GateClass::one_qubit);
    set.idle.gate_class = GateClass::idle;
    return set;
  }
  FieldNoiseParams field{config.sigma_b_gauss, config.isotope.ideal_field_gauss, config.tau_2q_seconds,
                         config.isotope.kind, config.isotope.hyperfine_splitting};
  set.p_dephase_2q = dephasing_probability(field, k);
  field.tau_seconds = config.tau_1q_seconds;
  set.p_dephase_1q = dephasing_probability(field, k);

  ChannelOptions opts;
  opts.single_qubit_ratio = config.single_qubit_scatter_ratio;
  opts.seepage_probability = config.seepage_probability;
  set.two_qubit = build_channel(config.isotope, config.p_scatter, set.p_dephase_2q, GateClass::two_qubit, opts);
  set.one_qubit = build_channel(config.isotope, config.p_scatter, set.p_dephase_1q, GateClass::one_qubit, opts);
  set.idle = build_channel(config.isotope, 0.0, 0.0, GateClass::idle, opts);
  if (config.idle_noise) set.idle.p_z = set.p_dephase_2q;
  return set;
}

}  // namespace toricleak
