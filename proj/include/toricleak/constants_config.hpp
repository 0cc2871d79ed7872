#pragma once

#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toricleak {

/// Physical constants shared by the noise models. Angular units throughout.
struct PhysicalConstants {
  double bohr_magneton_over_hbar = 8.794100e6;  // rad s^-1 G^-1
  double electron_g = 2.00231930436;            // g_s
  double nuclear_g = -5.3569e-4;                // g_I, 171Yb+ in Bohr magnetons
  double electron_lande_g = 2.002;              // g_J of S_1/2
};

enum class IsotopeKind { zeeman, hyperfine };

std::string_view to_string(IsotopeKind kind);
IsotopeKind parse_isotope(std::string_view name);

/// Default clock-transition splitting of the I=1/2 isotope (171Yb+).
inline constexpr double kDefaultHyperfineSplitting = 2.0 * std::numbers::pi * 12.642812118e9;

struct IsotopeProfile {
  IsotopeKind kind = IsotopeKind::zeeman;
  double hyperfine_splitting = 0.0;  // rad/s, hyperfine only
  double ideal_field_gauss = 0.0;    // B_0

  bool leakage_capable() const { return kind == IsotopeKind::hyperfine; }

  static IsotopeProfile zeeman();
  static IsotopeProfile hyperfine(double splitting = kDefaultHyperfineSplitting, double b0 = 0.0);

  bool operator==(const IsotopeProfile&) const = default;
};

/// `physical` derives channels from the trapped-ion models; `depolarizing`
/// applies independent single-qubit depolarizing noise of strength p_scatter
/// after every gate (used for threshold sanity checks).
enum class NoiseModel { physical, depolarizing };

std::string_view to_string(NoiseModel model);
NoiseModel parse_noise_model(std::string_view name);

inline constexpr double kDefaultTau1q = 1e-6;
inline constexpr double kDefaultTau2q = 200e-6;
inline constexpr double kDefaultSingleQubitScatterRatio = 0.038;

struct ExperimentConfig {
  int distance = 5;
  int cycles = 0;  // 0 means "use distance"
  std::int64_t trials = 10000;
  IsotopeProfile isotope = IsotopeProfile::zeeman();
  NoiseModel noise = NoiseModel::physical;
  double sigma_b_gauss = 0.0;
  double p_scatter = 0.0;
  double tau_1q_seconds = kDefaultTau1q;
  double tau_2q_seconds = kDefaultTau2q;
  bool lrc_enabled = false;
  std::uint64_t seed = 1;
  std::optional<double> seepage_probability;  // defaults to p_leak
  double single_qubit_scatter_ratio = kDefaultSingleQubitScatterRatio;
  bool idle_noise = false;

  int effective_cycles() const { return cycles > 0 ? cycles : distance; }

  bool operator==(const ExperimentConfig&) const = default;
};

/// Raised for unparsable files and for invariant violations. `field()` names
/// the offending key when the failure is tied to one.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Throws ConfigError on the first violated invariant.
void validate(const ExperimentConfig& config);

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string write_config(const ExperimentConfig& config);

}  // namespace toricleak
