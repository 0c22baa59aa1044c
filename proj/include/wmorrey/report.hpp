#pragma once

#include <string>
#include <vector>

#include "wmorrey/harness.hpp"

namespace wmorrey {

/// Flat CSV: one row per (experiment, level, function, center, radius).
std::string report_csv(const std::vector<ExperimentReport>& reports);

/// JSON mirror of the reports (deterministic key order, shortest round-trip doubles).
std::string report_json(const std::vector<ExperimentReport>& reports);

/// Writes "<stem>.csv" / "<stem>.json" into `directory`, creating it if needed.
/// Throws std::runtime_error with the offending path on I/O failure.
std::vector<std::string> write_reports(const std::vector<ExperimentReport>& reports, const std::string& directory,
                                       const std::vector<std::string>& formats, const std::string& stem = "report");

}  // namespace wmorrey
