#pragma once

#include <json.hpp>

#include "netembed/pcs.hpp"

namespace netembed {

// JSON <-> ExperimentPlan. Parsing is strict: unknown keys anywhere in the
// document are rejected so typos cannot silently fall back to defaults.
// Every field has a default; serialization always emits the complete
// effective configuration (this is what reports echo for provenance).
nlohmann::json plan_to_json(const ExperimentPlan& plan);
ExperimentPlan plan_from_json(const nlohmann::json& doc);

// The default desk-scale plan: DeepWalk and spectral over a small dimension
// grid with both downstream models.
ExperimentPlan default_plan();

}  // namespace netembed
