#include "toricleak/scattering.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "toricleak/constants_config.hpp"

namespace toricleak {

namespace {

constexpr double kSpeedOfLight = 299792458.0;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Yb+ S_1/2 -> P_1/2 / P_3/2 wavelengths (vacuum) and P-state linewidth.
constexpr double kPHalfWavelength = 369.5262e-9;
constexpr double kPThreeHalfWavelength = 328.9372e-9;
constexpr double kGamma = 2.0 * std::numbers::pi * 19.6e6;

// Far off resonance, sum_e (eps_out* . d)|e><e|(eps_in . d) restricted to P_J
// reduces on the electron spin to a_J (eps_out* . eps_in) + i b_J (eps_out* x
// eps_in) . sigma, in units of the largest S-P dipole element squared.
constexpr std::array<double, 2> kScalarWeight{1.0 / 3.0, 2.0 / 3.0};
constexpr std::array<double, 2> kVectorWeight{1.0 / 3.0, -1.0 / 3.0};

double angular_frequency(double wavelength) { return 2.0 * std::numbers::pi * kSpeedOfLight / wavelength; }

using Vec3 = std::array<double, 3>;
using cplx = std::complex<double>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Ground level as amplitudes over |m_s> (x) |m_I>, index 2*electron + nuclear
// (0 = down). The zeeman isotope uses only nuclear index 0.
using SpinState = std::array<cplx, 4>;

SpinState apply_sigma(const Vec3& v, const SpinState& s) {
  // (v . sigma) on the electron: sigma_z |up> = |up>, sigma_+ = |up><down|.
  SpinState out{};
  for (int n = 0; n < 2; ++n) {
    const cplx down = s[0 * 2 + n];
    const cplx up = s[1 * 2 + n];
    out[1 * 2 + n] = v[2] * up + cplx(v[0], -v[1]) * down;
    out[0 * 2 + n] = -v[2] * down + cplx(v[0], v[1]) * up;
  }
  return out;
}

cplx inner(const SpinState& a, const SpinState& b) {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

struct GroundLevel {
  AtomicLevel level;
  SpinState state;
};

std::vector<GroundLevel> ground_levels(IsotopeKind kind, double hyperfine_splitting) {
  const double r = 1.0 / std::numbers::sqrt2;
  if (kind == IsotopeKind::zeeman) {
    return {
        {{"S1/2 m=-1/2", 0.5, -0.5, LevelRole::qubit_lower, 0.0}, {1.0, 0.0, 0.0, 0.0}},
        {{"S1/2 m=+1/2", 0.5, 0.5, LevelRole::qubit_upper, 0.0}, {0.0, 0.0, 1.0, 0.0}},
    };
  }
  const double w = hyperfine_splitting;
  return {
      {{"S1/2 F=0 mF=0", 0.0, 0.0, LevelRole::qubit_lower, 0.0}, {0.0, -r, r, 0.0}},
      {{"S1/2 F=1 mF=-1", 1.0, -1.0, LevelRole::leakage, w}, {1.0, 0.0, 0.0, 0.0}},
      {{"S1/2 F=1 mF=0", 1.0, 0.0, LevelRole::qubit_upper, w}, {0.0, r, r, 0.0}},
      {{"S1/2 F=1 mF=+1", 1.0, 1.0, LevelRole::leakage, w}, {0.0, 0.0, 0.0, 1.0}},
  };
}

// Beams co-propagate along n with n_z^2 = 1/3 (B along z); polarizations are
// orthogonal and both perpendicular to n.
const std::array<Vec3, 2> kBeamPolarization{
    Vec3{-1.0 / std::numbers::sqrt3, 0.0, std::sqrt(2.0 / 3.0)},
    Vec3{0.0, 1.0, 0.0},
};

double sum_amplitude(const AmplitudeTable& table, const AtomicStructure& atom, std::size_t from,
                     std::size_t to, std::size_t channel) {
  double acc = 0.0;
  for (std::size_t j = 0; j < 2; ++j) acc += table.at(from, to, j, channel) / atom.detuning_from(from, j);
  return acc;
}

void check_levels(const AtomicStructure& atom, const AmplitudeTable& table) {
  if (atom.levels.size() != table.num_levels()) {
    throw StructuralError("amplitude table and atomic structure disagree on the level count");
  }
}

}  // namespace

std::size_t AtomicStructure::qubit_lower() const {
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i].role == LevelRole::qubit_lower) return i;
  throw StructuralError("atomic structure has no lower qubit level");
}

std::size_t AtomicStructure::qubit_upper() const {
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i].role == LevelRole::qubit_upper) return i;
  throw StructuralError("atomic structure has no upper qubit level");
}

std::vector<std::size_t> AtomicStructure::leakage_levels() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i].role == LevelRole::leakage) out.push_back(i);
  return out;
}

AmplitudeTable::AmplitudeTable(std::size_t num_levels, std::vector<std::string> channel_labels)
    : num_levels_(num_levels),
      channels_(std::move(channel_labels)),
      coeff_(num_levels * num_levels * 2 * channels_.size(), kNaN) {}

std::size_t AmplitudeTable::index(std::size_t from, std::size_t to, std::size_t j, std::size_t channel) const {
  if (from >= num_levels_ || to >= num_levels_ || j >= 2 || channel >= channels_.size()) {
    throw StructuralError("amplitude table index out of range");
  }
  return ((from * num_levels_ + to) * 2 + j) * channels_.size() + channel;
}

double AmplitudeTable::at(std::size_t from, std::size_t to, std::size_t j, std::size_t channel) const {
  const double v = coeff_[index(from, to, j, channel)];
  if (std::isnan(v)) {
    throw StructuralError("amplitude table has no entry for levels " + std::to_string(from) + " -> " +
                          std::to_string(to));
  }
  return v;
}

void AmplitudeTable::set(std::size_t from, std::size_t to, std::size_t j, std::size_t channel, double value) {
  coeff_[index(from, to, j, channel)] = value;
}

bool AmplitudeTable::has(std::size_t from, std::size_t to) const {
  if (from >= num_levels_ || to >= num_levels_) return false;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t c = 0; c < channels_.size(); ++c)
      if (std::isnan(coeff_[index(from, to, j, c)])) return false;
  return true;
}

double transition_rate(std::size_t from, std::size_t to, const BeamParams& beam, const AtomicStructure& atom,
                       const AmplitudeTable& table) {
  check_levels(atom, table);
  const double g = beam.coupling();
  double acc = 0.0;
  for (std::size_t c = 0; c < table.num_channels(); ++c) {
    const double a = sum_amplitude(table, atom, from, to, c);
    acc += a * a;
  }
  return g * g * atom.gamma * acc;
}

double raman_rate(std::size_t i, std::size_t j, const BeamParams& beam, const AtomicStructure& atom,
                  const AmplitudeTable& table) {
  if (i == j) throw std::domain_error("Raman rate needs two distinct levels");
  return transition_rate(i, j, beam, atom, table) + transition_rate(j, i, beam, atom, table);
}

double rayleigh_dephasing_rate(std::size_t i, std::size_t j, const BeamParams& beam, const AtomicStructure& atom,
                               const AmplitudeTable& table) {
  if (i == j) throw std::domain_error("Rayleigh dephasing needs two distinct levels");
  check_levels(atom, table);
  const double g = beam.coupling();
  double acc = 0.0;
  for (std::size_t c = 0; c < table.num_channels(); ++c) {
    const double diff = sum_amplitude(table, atom, j, j, c) - sum_amplitude(table, atom, i, i, c);
    acc += diff * diff;
  }
  return g * g * atom.gamma * acc;
}

ScatteringRates scattering_rates(const BeamParams& beam, const AtomicStructure& atom, const AmplitudeTable& table) {
  const std::size_t lo = atom.qubit_lower();
  const std::size_t hi = atom.qubit_upper();
  ScatteringRates r;
  r.raman_bitflip = raman_rate(lo, hi, beam, atom, table);
  r.rayleigh_dephasing = rayleigh_dephasing_rate(lo, hi, beam, atom, table);
  const auto leaks = atom.leakage_levels();
  for (std::size_t q : {lo, hi})
    for (std::size_t l : leaks) r.leakage += 0.5 * transition_rate(q, l, beam, atom, table);
  return r;
}

double two_photon_rabi(const BeamParams& beam, const AtomicStructure& atom, const AmplitudeTable& table) {
  const std::size_t lo = atom.qubit_lower();
  double acc = 0.0;
  for (std::size_t j = 0; j < 2; ++j) acc += table.stimulated[j] / atom.detuning_from(lo, j);
  const double g = beam.coupling();
  return 2.0 * g * g * std::abs(acc);
}

BeamParams calibrate_pi_rotation(BeamParams beam, const AtomicStructure& atom, const AmplitudeTable& table,
                                 double tau) {
  if (!(tau > 0.0)) throw std::domain_error("pi-rotation calibration needs a positive gate time");
  BeamParams unit = beam;
  unit.field_amplitude = 2.0 / beam.dipole_max;  // coupling() == 1
  const double rabi_per_unit = two_photon_rabi(unit, atom, table);
  if (!(rabi_per_unit > 0.0)) throw StructuralError("geometry has no stimulated qubit coupling");
  // Rabi frequency scales with coupling^2.
  const double g = std::sqrt(std::numbers::pi / tau / rabi_per_unit);
  beam.field_amplitude = 2.0 * g / beam.dipole_max;
  return beam;
}

ScatteringProbabilities per_gate_scattering(const ScatteringRates& rates, double tau, double area) {
  auto prob = [&](double rate) { return -std::expm1(-rate * tau * area); };
  return {prob(rates.raman_bitflip), prob(rates.leakage), prob(rates.rayleigh_dephasing)};
}

AtomicStructure default_atomic_structure(IsotopeKind kind, double laser_wavelength_m, double hyperfine_splitting) {
  AtomicStructure atom;
  atom.gamma = kGamma;
  const double laser = angular_frequency(laser_wavelength_m);
  atom.detuning[kPHalf] = laser - angular_frequency(kPHalfWavelength);
  atom.detuning[kPThreeHalf] = laser - angular_frequency(kPThreeHalfWavelength);
  for (auto& g : ground_levels(kind, hyperfine_splitting)) atom.levels.push_back(g.level);
  return atom;
}

AmplitudeTable default_amplitude_table(IsotopeKind kind) {
  const auto levels = ground_levels(kind, kDefaultHyperfineSplitting);
  const char* axis = "xyz";
  std::vector<std::string> labels;
  for (int b = 0; b < 2; ++b)
    for (int k = 0; k < 3; ++k)
      for (const char* part : {"scalar", "vector"})
        labels.push_back("beam" + std::to_string(b + 1) + "_" + axis[k] + "_" + part);

  AmplitudeTable table(levels.size(), labels);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t f = 0; f < levels.size(); ++f) {
      const bool elastic = i == f;
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t k = 0; k < 3; ++k) {
          Vec3 e{};
          e[k] = 1.0;
          const Vec3 v = cross(e, kBeamPolarization[b]);
          const double overlap = inner(levels[f].state, levels[i].state).real();
          const cplx m = inner(levels[f].state, apply_sigma(v, levels[i].state));
          // Elastic vector amplitudes are real expectation values (times i);
          // inelastic ones share one phase across J, so keep the magnitude.
          const double vec = elastic ? m.real() : std::abs(m);
          const std::size_t c = (b * 3 + k) * 2;
          for (std::size_t j = 0; j < 2; ++j) {
            table.set(i, f, j, c, kScalarWeight[j] * dot(e, kBeamPolarization[b]) * overlap);
            table.set(i, f, j, c + 1, kVectorWeight[j] * vec);
          }
        }
      }
    }
  }

  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].level.role == LevelRole::qubit_lower) lo = i;
    if (levels[i].level.role == LevelRole::qubit_upper) hi = i;
  }
  const Vec3 n = cross(kBeamPolarization[1], kBeamPolarization[0]);
  const double coupling = std::abs(inner(levels[hi].state, apply_sigma(n, levels[lo].state)));
  for (std::size_t j = 0; j < 2; ++j) table.stimulated[j] = kVectorWeight[j] * coupling;
  return table;
}

GateScatteringAudit audit_gate_scattering(IsotopeKind kind, double tau_1q, double tau_2q, double single_qubit_ratio) {
  const AtomicStructure atom = default_atomic_structure(kind);
  const AmplitudeTable table = default_amplitude_table(kind);
  auto at = [&](double tau, double area) {
    const BeamParams beam = calibrate_pi_rotation(BeamParams{}, atom, table, tau);
    return per_gate_scattering(scattering_rates(beam, atom, table), tau, area);
  };
  GateScatteringAudit audit;
  audit.one_qubit = at(tau_1q, 1.0);
  audit.two_qubit = single_qubit_ratio > 0.0 ? at(tau_2q, 1.0 / single_qubit_ratio) : ScatteringProbabilities{};
  return audit;
}

double default_rayleigh_fraction(IsotopeKind kind) {
  const AtomicStructure atom = default_atomic_structure(kind);
  const AmplitudeTable table = default_amplitude_table(kind);
  const ScatteringRates r = scattering_rates(calibrate_pi_rotation(BeamParams{}, atom, table, 1.0), atom, table);
  const double inelastic = r.raman_bitflip + r.leakage;
  return inelastic > 0.0 ? r.rayleigh_dephasing / inelastic : 0.0;
}

namespace {

std::string_view role_name(LevelRole role) {
  switch (role) {
    case LevelRole::qubit_lower: return "qubit_lower";
    case LevelRole::qubit_upper: return "qubit_upper";
    case LevelRole::leakage: return "leakage";
    case LevelRole::other: break;
  }
  return "other";
}

LevelRole parse_role(const std::string& name) {
  if (name == "qubit_lower") return LevelRole::qubit_lower;
  if (name == "qubit_upper") return LevelRole::qubit_upper;
  if (name == "leakage") return LevelRole::leakage;
  if (name == "other") return LevelRole::other;
  throw ConfigError("levels.role", "unknown level role '" + name + "'");
}

}  // namespace

nlohmann::json scattering_model_to_json(const AtomicStructure& atom, const AmplitudeTable& table) {
  using nlohmann::json;
  json doc;
  doc["gamma_rad_per_second"] = atom.gamma;
  doc["detuning_p_half_rad_per_second"] = atom.detuning[kPHalf];
  doc["detuning_p_three_half_rad_per_second"] = atom.detuning[kPThreeHalf];
  json levels = json::array();
  for (const auto& l : atom.levels) {
    levels.push_back({{"label", l.label},
                      {"f", l.f},
                      {"m_f", l.m_f},
                      {"role", role_name(l.role)},
                      {"energy_rad_per_second", l.energy}});
  }
  doc["levels"] = levels;
  doc["channels"] = table.channel_labels();
  doc["stimulated"] = table.stimulated;
  json amps = json::array();
  for (std::size_t i = 0; i < table.num_levels(); ++i) {
    for (std::size_t f = 0; f < table.num_levels(); ++f) {
      if (!table.has(i, f)) continue;
      for (std::size_t j = 0; j < 2; ++j) {
        std::vector<double> row;
        for (std::size_t c = 0; c < table.num_channels(); ++c) row.push_back(table.at(i, f, j, c));
        amps.push_back({{"from", i}, {"to", f}, {"j", j == kPHalf ? "1/2" : "3/2"}, {"coefficients", row}});
      }
    }
  }
  doc["amplitudes"] = amps;
  return doc;
}

void scattering_model_from_json(const nlohmann::json& doc, AtomicStructure& atom, AmplitudeTable& table) {
  try {
    AtomicStructure a;
    a.gamma = doc.at("gamma_rad_per_second").get<double>();
    a.detuning[kPHalf] = doc.at("detuning_p_half_rad_per_second").get<double>();
    a.detuning[kPThreeHalf] = doc.at("detuning_p_three_half_rad_per_second").get<double>();
    if (!(a.gamma > 0.0)) throw ConfigError("gamma_rad_per_second", "decay rate must be positive");
    if (a.detuning[0] == 0.0 || a.detuning[1] == 0.0) {
      throw ConfigError("detuning", "detunings must be nonzero");
    }
    for (const auto& l : doc.at("levels")) {
      a.levels.push_back({l.at("label").get<std::string>(), l.value("f", 0.0), l.value("m_f", 0.0),
                          parse_role(l.at("role").get<std::string>()), l.value("energy_rad_per_second", 0.0)});
    }
    AmplitudeTable t(a.levels.size(), doc.at("channels").get<std::vector<std::string>>());
    t.stimulated = doc.at("stimulated").get<std::array<double, 2>>();
    for (const auto& e : doc.at("amplitudes")) {
      const auto from = e.at("from").get<std::size_t>();
      const auto to = e.at("to").get<std::size_t>();
      const auto js = e.at("j").get<std::string>();
      if (js != "1/2" && js != "3/2") throw ConfigError("amplitudes.j", "j must be \"1/2\" or \"3/2\"");
      const std::size_t j = js == "1/2" ? kPHalf : kPThreeHalf;
      const auto row = e.at("coefficients").get<std::vector<double>>();
      if (row.size() != t.num_channels()) throw ConfigError("amplitudes.coefficients", "wrong channel count");
      for (std::size_t c = 0; c < row.size(); ++c) t.set(from, to, j, c, row[c]);
    }
    atom = std::move(a);
    table = std::move(t);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("scattering", e.what());
  } catch (const StructuralError& e) {
    throw ConfigError("amplitudes", e.what());
  }
}

}  // namespace toricleak
