#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "flatinc/projective.hpp"

namespace flatinc {

struct Failure {
  std::string what;
  nlohmann::json params;  // full reproduction parameters, exact values as strings
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  nlohmann::json witnesses = nlohmann::json::object();
  std::vector<std::string> notes;
  std::optional<Table> table;

  bool passed() const { return failures.empty(); }
  void check(bool ok, std::string what, nlohmann::json params);
  /// Folds another report in as sub-suite `name`.
  void absorb(const std::string& name, const SuiteReport& other);
};

enum class ReportFormat { Json, Csv };

std::optional<ReportFormat> parse_format(const std::string& name);

nlohmann::json to_json(const SuiteReport& report);
/// Deterministic text: JSON with sorted keys, or CSV (the table when present,
/// otherwise key,value rows).
std::string render(const SuiteReport& report, ReportFormat format);
void save_report(const SuiteReport& report, const std::filesystem::path& path,
                 ReportFormat format);

nlohmann::json flat_json(const Flat& f);
nlohmann::json point_json(const Point& p);

}  // namespace flatinc
