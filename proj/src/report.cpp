#include "netembed/report.hpp"

#include <filesystem>
#include <set>
#include <sstream>

#include <Eigen/Core>

#include "netembed/util.hpp"

namespace netembed {

std::string report_rows_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "method,dim,task,model,metric,mean,q025,q975,R,seed,status\n";
  for (const ReportRow& r : rows) {
    out << r.method << ',' << r.dim << ',' << r.task << ',' << r.model << ','
        << r.metric << ',' << format_double(r.band.mean) << ','
        << format_double(r.band.low) << ',' << format_double(r.band.high)
        << ',' << r.samples << ',' << r.seed << ',' << r.status << '\n';
  }
  return out.str();
}

nlohmann::json report_row_json(const ReportRow& row) {
  return {{"method", row.method}, {"dim", row.dim},
          {"task", row.task},     {"model", row.model},
          {"metric", row.metric}, {"mean", row.band.mean},
          {"q025", row.band.low}, {"q975", row.band.high},
          {"R", row.samples},     {"seed", row.seed},
          {"status", row.status}};
}

nlohmann::json timing_row_json(const TimingRow& row) {
  return {{"method", row.method},
          {"dim", row.dim},
          {"stage", row.stage},
          {"mean_seconds", row.band.mean},
          {"q025_seconds", row.band.low},
          {"q975_seconds", row.band.high},
          {"R", row.samples},
          {"threads", row.threads}};
}

nlohmann::json environment_fingerprint(int threads) {
  nlohmann::json env;
#if defined(__VERSION__)
  env["compiler"] = __VERSION__;
#endif
  env["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." +
                 std::to_string(EIGEN_MAJOR_VERSION) + "." +
                 std::to_string(EIGEN_MINOR_VERSION);
#if defined(__linux__)
  env["platform"] = "linux";
#elif defined(__APPLE__)
  env["platform"] = "darwin";
#else
  env["platform"] = "other";
#endif
  env["threads"] = threads;
  return env;
}

std::vector<std::string> write_pcs_report(const PcsReport& report,
                                          const nlohmann::json& effective_config,
                                          const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> written;

  std::set<std::string> tasks;
  for (const ReportRow& r : report.predictability) tasks.insert(r.task);
  for (const std::string& task : tasks) {
    std::vector<ReportRow> rows;
    for (const ReportRow& r : report.predictability)
      if (r.task == task) rows.push_back(r);
    const std::string path =
        (fs::path(out_dir) / ("predictability_" + task + ".csv")).string();
    write_file_atomic(path, report_rows_csv(rows));
    written.push_back(path);
  }
  if (!report.stability.empty()) {
    const std::string path = (fs::path(out_dir) / "stability.csv").string();
    write_file_atomic(path, report_rows_csv(report.stability));
    written.push_back(path);
  }

  nlohmann::json doc;
  doc["plan"] = effective_config;
  doc["environment"] =
      environment_fingerprint(effective_config.value("threads", 1));
  doc["predictability"] = nlohmann::json::array();
  for (const ReportRow& r : report.predictability)
    doc["predictability"].push_back(report_row_json(r));
  doc["stability"] = nlohmann::json::array();
  for (const ReportRow& r : report.stability)
    doc["stability"].push_back(report_row_json(r));
  doc["computability"] = nlohmann::json::array();
  for (const TimingRow& r : report.computability)
    doc["computability"].push_back(timing_row_json(r));

  const std::string json_path = (fs::path(out_dir) / "report.json").string();
  write_file_atomic(json_path, doc.dump(2) + "\n");
  written.push_back(json_path);
  return written;
}

}  // namespace netembed
