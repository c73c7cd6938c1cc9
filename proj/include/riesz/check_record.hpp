#pragma once

// Uniform result records for every certified inequality, and deterministic
// report serialization. A record states what was computed, what it was
// compared against, in which direction, and with how much relative slack;
// divergent quadratures are recorded as such and never count as passes.
// Reports serialize to JSON or CSV with byte-stable output: fixed key order,
// shortest-round-trip numbers in JSON, %.17g in CSV, no timestamps, and
// atomic write (temp file + rename).

#include <string>
#include <utility>
#include <vector>

#include "riesz/special_functions.hpp"

namespace riesz {

enum class CheckStatus { pass, fail, divergent, recorded_only };
enum class CheckDirection { computed_le_bound, computed_ge_bound, recorded };

std::string to_string(CheckStatus s);
std::string to_string(CheckDirection dir);

struct CheckRecord {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;  // echoed in order
  double computed = 0.0;
  double bound = 0.0;
  CheckDirection direction = CheckDirection::recorded;
  double slack_used = 0.0;  // relative slack granted on the bound side
  CheckStatus status = CheckStatus::recorded_only;
};

// Status from the comparison: pass iff computed respects the direction with
// slack_used * |bound| of relative room; NaN on either side means divergent.
CheckRecord make_check(std::string name,
                       std::vector<std::pair<std::string, std::string>> inputs, double computed,
                       double bound, CheckDirection direction, double slack_used);

// A value recorded for inspection without a verdict.
CheckRecord make_recorded(std::string name,
                          std::vector<std::pair<std::string, std::string>> inputs,
                          double computed, double reference);

// A computation that diverged or could not reach tolerance.
CheckRecord make_divergent(std::string name,
                           std::vector<std::pair<std::string, std::string>> inputs,
                           std::string reason);

struct ReportSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int divergent = 0;
  int recorded = 0;
};

ReportSummary summarize(const std::vector<CheckRecord>& records);

struct RunReport {
  ProblemParams params;
  std::vector<std::pair<std::string, std::string>> config;  // echoed settings
  std::vector<CheckRecord> records;
};

enum class ReportFormat { json, csv };

std::string report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);

// Serialize and write atomically. Throws ConfigError when the report has no
// records and IoError when the destination cannot be written.
void write_report(const RunReport& report, ReportFormat format, const std::string& path);

// Inverse of report_to_csv for the record rows (used to verify round-trips).
std::vector<CheckRecord> parse_csv_records(const std::string& csv);

}  // namespace riesz
