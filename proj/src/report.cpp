#include "flatinc/report.hpp"

#include <fstream>
#include <sstream>

#include "flatinc/error.hpp"

namespace flatinc {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i != 0) out << ',';
    out << csv_field(row[i]);
  }
  out << '\n';
}

}  // namespace

void SuiteReport::check(bool ok, std::string what, json params) {
  ++cases;
  if (!ok) failures.push_back({std::move(what), std::move(params)});
}

void SuiteReport::absorb(const std::string& name, const SuiteReport& other) {
  cases += other.cases;
  for (const auto& f : other.failures) {
    failures.push_back({name + ": " + f.what, f.params});
  }
  witnesses[name] = other.witnesses;
  for (const auto& n : other.notes) notes.push_back(name + ": " + n);
}

std::optional<ReportFormat> parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

json to_json(const SuiteReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"what", f.what}, {"params", f.params}});
  }
  json doc = {{"schema", 1},
              {"suite", report.suite},
              {"cases", report.cases},
              {"passed", report.passed()},
              {"failures", std::move(failures)},
              {"witnesses", report.witnesses},
              {"notes", report.notes}};
  if (report.table) {
    doc["table"] = {{"header", report.table->header}, {"rows", report.table->rows}};
  }
  return doc;
}

std::string render(const SuiteReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(report).dump(2) + "\n";
  std::ostringstream out;
  if (report.table) {
    csv_row(out, report.table->header);
    for (const auto& row : report.table->rows) csv_row(out, row);
    return out.str();
  }
  csv_row(out, {"key", "value"});
  csv_row(out, {"suite", report.suite});
  csv_row(out, {"cases", std::to_string(report.cases)});
  csv_row(out, {"passed", report.passed() ? "true" : "false"});
  for (const auto& f : report.failures) csv_row(out, {"failure", f.what + " " + f.params.dump()});
  for (const auto& [key, value] : report.witnesses.items()) {
    csv_row(out, {key, value.is_string() ? value.get<std::string>() : value.dump()});
  }
  return out.str();
}

void save_report(const SuiteReport& report, const std::filesystem::path& path,
                 ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParameterError, "cannot write " + path.string());
  out << render(report, format);
}

json flat_json(const Flat& f) {
  json rows = json::array();
  for (const auto& row : f.basis()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(format_rational(x));
    rows.push_back(std::move(r));
  }
  return {{"dim", f.dim()}, {"basis", std::move(rows)}};
}

json point_json(const Point& p) {
  json c = json::array();
  for (const auto& x : p.coords()) c.push_back(format_rational(x));
  return c;
}

}  // namespace flatinc
