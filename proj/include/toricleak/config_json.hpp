#pragma once

#include <initializer_list>
#include <string_view>

#include <json.hpp>

#include "toricleak/constants_config.hpp"

namespace toricleak {

/// Reads the scalar experiment keys of `doc` on top of `base`. Keys listed in
/// `extra_keys` are skipped (the sweep loader owns them); any other unknown key
/// is rejected so typos surface as errors. Does not validate.
ExperimentConfig config_from_json(const nlohmann::json& doc, ExperimentConfig base,
                                  std::initializer_list<std::string_view> extra_keys = {});

nlohmann::json config_to_json(const ExperimentConfig& config);

/// Parses text, converting parse failures to ConfigError with line information.
nlohmann::json parse_json_text(std::string_view text);

}  // namespace toricleak
