#include "riesz/check_record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void require_records(const std::vector<CheckRecord>& records) {
  if (records.empty()) throw ConfigError("report has no records");
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::divergent: return "divergent";
    case CheckStatus::recorded_only: return "recorded_only";
  }
  return "unknown";
}

std::string to_string(CheckDirection dir) {
  switch (dir) {
    case CheckDirection::computed_le_bound: return "computed_le_bound";
    case CheckDirection::computed_ge_bound: return "computed_ge_bound";
    case CheckDirection::recorded: return "recorded";
  }
  return "unknown";
}

CheckRecord make_check(std::string name,
                       std::vector<std::pair<std::string, std::string>> inputs, double computed,
                       double bound, CheckDirection direction, double slack_used) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.inputs = std::move(inputs);
  rec.computed = computed;
  rec.bound = bound;
  rec.direction = direction;
  rec.slack_used = slack_used;
  if (std::isnan(computed) || std::isnan(bound)) {
    rec.status = CheckStatus::divergent;
  } else if (direction == CheckDirection::recorded) {
    rec.status = CheckStatus::recorded_only;
  } else {
    const double room = slack_used * std::abs(bound);
    const bool ok = direction == CheckDirection::computed_le_bound ? computed <= bound + room
                                                                   : computed >= bound - room;
    rec.status = ok ? CheckStatus::pass : CheckStatus::fail;
  }
  return rec;
}

CheckRecord make_recorded(std::string name,
                          std::vector<std::pair<std::string, std::string>> inputs,
                          double computed, double reference) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.inputs = std::move(inputs);
  rec.computed = computed;
  rec.bound = reference;
  rec.direction = CheckDirection::recorded;
  rec.slack_used = 0.0;
  rec.status = CheckStatus::recorded_only;
  return rec;
}

CheckRecord make_divergent(std::string name,
                           std::vector<std::pair<std::string, std::string>> inputs,
                           std::string reason) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.inputs = std::move(inputs);
  rec.inputs.emplace_back("reason", std::move(reason));
  rec.computed = kNaN;
  rec.bound = kNaN;
  rec.direction = CheckDirection::recorded;
  rec.slack_used = 0.0;
  rec.status = CheckStatus::divergent;
  return rec;
}

ReportSummary summarize(const std::vector<CheckRecord>& records) {
  ReportSummary s;
  s.total = int(records.size());
  for (const CheckRecord& rec : records) {
    switch (rec.status) {
      case CheckStatus::pass: ++s.passed; break;
      case CheckStatus::fail: ++s.failed; break;
      case CheckStatus::divergent: ++s.divergent; break;
      case CheckStatus::recorded_only: ++s.recorded; break;
    }
  }
  return s;
}

std::string report_to_json(const RunReport& report) {
  require_records(report.records);
  nlohmann::ordered_json j;
  j["params"] = {{"d", report.params.d}, {"alpha", report.params.alpha}};
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.config) cfg[key] = value;
  j["config"] = cfg;
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const CheckRecord& rec : report.records) {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, value] : rec.inputs) inputs[key] = value;
    // NaN serializes as null, marking the divergent entries.
    recs.push_back({{"name", rec.name},
                    {"inputs", inputs},
                    {"computed", rec.computed},
                    {"bound", rec.bound},
                    {"direction", to_string(rec.direction)},
                    {"slack_used", rec.slack_used},
                    {"status", to_string(rec.status)}});
  }
  j["records"] = recs;
  const ReportSummary s = summarize(report.records);
  j["summary"] = {{"total", s.total},
                  {"pass", s.passed},
                  {"fail", s.failed},
                  {"divergent", s.divergent},
                  {"recorded_only", s.recorded}};
  return j.dump(2) + "\n";
}

std::string report_to_csv(const RunReport& report) {
  require_records(report.records);
  std::string out = "name,status,direction,computed,bound,slack_used,inputs\n";
  for (const CheckRecord& rec : report.records) {
    std::string inputs;
    for (const auto& [key, value] : rec.inputs) {
      if (!inputs.empty()) inputs += ';';
      inputs += key + "=" + value;
    }
    out += rec.name + "," + to_string(rec.status) + "," + to_string(rec.direction) + "," +
           fmt17(rec.computed) + "," + fmt17(rec.bound) + "," + fmt17(rec.slack_used) + ",\"" +
           inputs + "\"\n";
  }
  return out;
}

void write_report(const RunReport& report, ReportFormat format, const std::string& path) {
  const std::string body =
      format == ReportFormat::json ? report_to_json(report) : report_to_csv(report);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out << body;
    if (!out.flush()) throw IoError("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("cannot move report into place at " + path);
  }
}

std::vector<CheckRecord> parse_csv_records(const std::string& csv) {
  std::vector<CheckRecord> records;
  std::size_t pos = csv.find('\n');
  if (pos == std::string::npos) throw ConfigError("csv report lacks a header line");
  ++pos;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    if (end == std::string::npos) end = csv.size();
    const std::string line = csv.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int i = 0; i < 6; ++i) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) throw ConfigError("csv record row is malformed: " + line);
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    std::string inputs_field = line.substr(start);
    if (inputs_field.size() < 2 || inputs_field.front() != '"' || inputs_field.back() != '"') {
      throw ConfigError("csv inputs field must be quoted: " + line);
    }
    inputs_field = inputs_field.substr(1, inputs_field.size() - 2);

    CheckRecord rec;
    rec.name = fields[0];
    for (CheckStatus s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::divergent,
                          CheckStatus::recorded_only}) {
      if (to_string(s) == fields[1]) rec.status = s;
    }
    for (CheckDirection dir : {CheckDirection::computed_le_bound,
                               CheckDirection::computed_ge_bound, CheckDirection::recorded}) {
      if (to_string(dir) == fields[2]) rec.direction = dir;
    }
    rec.computed = std::strtod(fields[3].c_str(), nullptr);
    rec.bound = std::strtod(fields[4].c_str(), nullptr);
    rec.slack_used = std::strtod(fields[5].c_str(), nullptr);
    std::size_t ipos = 0;
    while (ipos < inputs_field.size()) {
      std::size_t isep = inputs_field.find(';', ipos);
      if (isep == std::string::npos) isep = inputs_field.size();
      const std::string item = inputs_field.substr(ipos, isep - ipos);
      ipos = isep + 1;
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw ConfigError("csv input item lacks '=': " + item);
      rec.inputs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace riesz
