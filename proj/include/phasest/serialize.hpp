#pragma once

// JSON forms used by the CLI and test fixtures.
//
//   PhaseState    {"lo": int, "coeffs": [[re, im], ...]}       ascending n
//   ErrorFunction {"kind": "sin"}
//                 {"kind": "interval", "T": real, "N": int, "coeffs": [r_0..r_K]}
//                 {"kind": "custom", "coeffs": [r_0, ..., r_K]}
//   SampleRun     {"seed": u64, "theta_true": real, "n": int, "samples_path": str}
//
// The "coeffs" written for interval losses are informational (K = 16); the
// kind is rebuilt from T and N on read.

#include <string>

#include <json.hpp>

#include "phasest/core.hpp"
#include "phasest/simulate.hpp"

namespace phasest {

nlohmann::ordered_json state_to_json(const PhaseState& state);
PhaseState state_from_json(const nlohmann::json& j);

nlohmann::ordered_json error_to_json(const ErrorFunction& err);
ErrorFunction error_from_json(const nlohmann::json& j);

nlohmann::ordered_json run_to_json(const SampleRun& run, const std::string& samples_path);

}  // namespace phasest
