#include "toricleak/constants_config.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "toricleak/config_json.hpp"

namespace toricleak {

using nlohmann::json;

std::string_view to_string(IsotopeKind kind) {
  return kind == IsotopeKind::zeeman ? "zeeman" : "hyperfine";
}

IsotopeKind parse_isotope(std::string_view name) {
  if (name == "zeeman" || name == "174") return IsotopeKind::zeeman;
  if (name == "hyperfine" || name == "171") return IsotopeKind::hyperfine;
  throw ConfigError("isotope", "unknown isotope '" + std::string(name) + "' (expected zeeman or hyperfine)");
}

std::string_view to_string(NoiseModel model) {
  return model == NoiseModel::physical ? "physical" : "depolarizing";
}

NoiseModel parse_noise_model(std::string_view name) {
  if (name == "physical") return NoiseModel::physical;
  if (name == "depolarizing") return NoiseModel::depolarizing;
  throw ConfigError("noise_model", "unknown noise model '" + std::string(name) + "'");
}

IsotopeProfile IsotopeProfile::zeeman() { return IsotopeProfile{IsotopeKind::zeeman, 0.0, 0.0}; }

IsotopeProfile IsotopeProfile::hyperfine(double splitting, double b0) {
  return IsotopeProfile{IsotopeKind::hyperfine, splitting, b0};
}

void validate(const ExperimentConfig& c) {
  if (c.distance < 3) throw ConfigError("distance", "distance must be at least 3");
  if (c.distance % 2 == 0) throw ConfigError("distance", "distance must be odd");
  if (c.cycles < 0) throw ConfigError("cycles", "cycles must be positive");
  if (c.trials < 1) throw ConfigError("trials", "trials must be positive");
  if (!(c.sigma_b_gauss >= 0.0)) throw ConfigError("sigma_b_gauss", "sigma_b must be non-negative");
  if (!(c.p_scatter >= 0.0 && c.p_scatter < 1.0)) {
    throw ConfigError("p_scatter", "p_scatter must lie in [0, 1)");
  }
  if (!(c.tau_1q_seconds > 0.0)) throw ConfigError("tau_1q_seconds", "gate time must be positive");
  if (!(c.tau_2q_seconds > 0.0)) throw ConfigError("tau_2q_seconds", "gate time must be positive");
  if (c.isotope.kind == IsotopeKind::hyperfine && !(c.isotope.hyperfine_splitting > 0.0)) {
    throw ConfigError("hyperfine_splitting_rad_per_second", "hyperfine splitting must be positive");
  }
  if (c.isotope.kind == IsotopeKind::zeeman && c.isotope.hyperfine_splitting != 0.0) {
    throw ConfigError("hyperfine_splitting_rad_per_second", "zeeman isotope has no hyperfine splitting");
  }
  if (c.lrc_enabled && !c.isotope.leakage_capable()) {
    throw ConfigError("lrc", "LRC requires leakage-capable isotope");
  }
  if (c.seepage_probability && !(*c.seepage_probability >= 0.0 && *c.seepage_probability <= 1.0)) {
    throw ConfigError("seepage_probability", "seepage probability must lie in [0, 1]");
  }
  if (!(c.single_qubit_scatter_ratio >= 0.0 && c.single_qubit_scatter_ratio <= 1.0)) {
    throw ConfigError("single_qubit_scatter_ratio", "ratio must lie in [0, 1]");
  }
}

namespace {

template <typename T>
T get_scalar(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (v.is_array() || v.is_object()) {
    throw ConfigError(key, "expected a scalar (lists belong in sweep files)");
  }
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(key, "expected true or false");
      return v.get<bool>();
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
      return v.get<T>();
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(key, "expected a number");
      return v.get<T>();
    } else {
      if (!v.is_string()) throw ConfigError(key, "expected a string");
      return v.get<T>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(key, e.what());
  }
}

constexpr std::string_view kKnownKeys[] = {
    "distance",       "cycles",          "trials",
    "seed",           "isotope",         "noise_model",
    "sigma_b_gauss",  "p_scatter",       "tau_1q_seconds",
    "tau_2q_seconds", "lrc",             "hyperfine_splitting_rad_per_second",
    "b0_gauss",       "seepage_probability", "single_qubit_scatter_ratio",
    "idle_noise",
};

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("parse failure: ") + e.what());
  }
}

ExperimentConfig config_from_json(const json& doc, ExperimentConfig c,
                                  std::initializer_list<std::string_view> extra_keys) {
  if (!doc.is_object()) throw ConfigError("", "config root must be an object");
  for (const auto& [key, _] : doc.items()) {
    const bool known = std::ranges::find(kKnownKeys, key) != std::end(kKnownKeys) ||
                       std::ranges::find(extra_keys, key) != extra_keys.end();
    if (!known) throw ConfigError(key, "unknown key");
  }

  if (doc.contains("isotope")) {
    const auto kind = parse_isotope(get_scalar<std::string>(doc, "isotope"));
    if (kind != c.isotope.kind) {
      c.isotope = kind == IsotopeKind::zeeman ? IsotopeProfile::zeeman() : IsotopeProfile::hyperfine();
    }
  }
  if (doc.contains("hyperfine_splitting_rad_per_second")) {
    c.isotope.hyperfine_splitting = get_scalar<double>(doc, "hyperfine_splitting_rad_per_second");
  }
  if (doc.contains("b0_gauss")) c.isotope.ideal_field_gauss = get_scalar<double>(doc, "b0_gauss");
  if (doc.contains("distance")) c.distance = get_scalar<int>(doc, "distance");
  if (doc.contains("cycles")) c.cycles = get_scalar<int>(doc, "cycles");
  if (doc.contains("trials")) c.trials = get_scalar<std::int64_t>(doc, "trials");
  if (doc.contains("seed")) c.seed = get_scalar<std::uint64_t>(doc, "seed");
  if (doc.contains("noise_model")) c.noise = parse_noise_model(get_scalar<std::string>(doc, "noise_model"));
  if (doc.contains("sigma_b_gauss")) c.sigma_b_gauss = get_scalar<double>(doc, "sigma_b_gauss");
  if (doc.contains("p_scatter")) c.p_scatter = get_scalar<double>(doc, "p_scatter");
  if (doc.contains("tau_1q_seconds")) c.tau_1q_seconds = get_scalar<double>(doc, "tau_1q_seconds");
  if (doc.contains("tau_2q_seconds")) c.tau_2q_seconds = get_scalar<double>(doc, "tau_2q_seconds");
  if (doc.contains("lrc")) c.lrc_enabled = get_scalar<bool>(doc, "lrc");
  if (doc.contains("seepage_probability")) {
    if (doc.at("seepage_probability").is_null()) {
      c.seepage_probability.reset();
    } else {
      c.seepage_probability = get_scalar<double>(doc, "seepage_probability");
    }
  }
  if (doc.contains("single_qubit_scatter_ratio")) {
    c.single_qubit_scatter_ratio = get_scalar<double>(doc, "single_qubit_scatter_ratio");
  }
  if (doc.contains("idle_noise")) c.idle_noise = get_scalar<bool>(doc, "idle_noise");
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json doc;
  doc["distance"] = c.distance;
  doc["cycles"] = c.cycles;
  doc["trials"] = c.trials;
  doc["seed"] = c.seed;
  doc["isotope"] = std::string(to_string(c.isotope.kind));
  doc["hyperfine_splitting_rad_per_second"] = c.isotope.hyperfine_splitting;
  doc["b0_gauss"] = c.isotope.ideal_field_gauss;
  doc["noise_model"] = std::string(to_string(c.noise));
  doc["sigma_b_gauss"] = c.sigma_b_gauss;
  doc["p_scatter"] = c.p_scatter;
  doc["tau_1q_seconds"] = c.tau_1q_seconds;
  doc["tau_2q_seconds"] = c.tau_2q_seconds;
  doc["lrc"] = c.lrc_enabled;
  doc["seepage_probability"] = c.seepage_probability ? json(*c.seepage_probability) : json(nullptr);
  doc["single_qubit_scatter_ratio"] = c.single_qubit_scatter_ratio;
  doc["idle_noise"] = c.idle_noise;
  return doc;
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c = config_from_json(parse_json_text(text), ExperimentConfig{});
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string write_config(const ExperimentConfig& config) { return config_to_json(config).dump(2) + "\n"; }

}  // namespace toricleak
