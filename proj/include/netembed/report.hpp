#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "netembed/pcs.hpp"

namespace netembed {

// Pinned CSV schema: method,dim,task,model,metric,mean,q025,q975,R,seed
// plus a trailing status column so failed cells are never silently dropped.
std::string report_rows_csv(const std::vector<ReportRow>& rows);

nlohmann::json report_row_json(const ReportRow& row);
nlohmann::json timing_row_json(const TimingRow& row);

// Writes one metrics CSV per task (predictability_<task>.csv), stability.csv,
// and report.json (plan echo, environment fingerprint, stage timings).
// Timings live only in the JSON so the CSVs are byte-identical across
// reruns of the same plan and seed. Returns the written paths.
std::vector<std::string> write_pcs_report(const PcsReport& report,
                                          const nlohmann::json& effective_config,
                                          const std::string& out_dir);

nlohmann::json environment_fingerprint(int threads);

}  // namespace netembed
