#pragma once

#include <cstdint>

#include "toricleak/constants_config.hpp"
#include "toricleak/decoder.hpp"
#include "toricleak/error_channels.hpp"

namespace toricleak {

/// Straightforward serial simulator of the standard circuit, kept as a test
/// oracle. It keeps qubit state in a coordinate-keyed map, derives its own
/// gate list from lattice coordinates and draws faults with
/// std::discrete_distribution. Only the decoder is shared with the main engine.
struct ReferenceResult {
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::int64_t leak_events = 0;

  double logical_fail_rate() const {
    return trials > 0 ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
  }
};

/// Throws std::invalid_argument when `config.lrc_enabled` is set.
ReferenceResult run_reference(const ExperimentConfig& config);

}  // namespace toricleak
