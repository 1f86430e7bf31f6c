#pragma once

// Machine-readable verification reports.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace thetalab {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Info };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string claim;
  CheckStatus status = CheckStatus::Fail;
  Json measured;
  Json expected;
  // "exact", "numeric" or "oracle".
  std::string method = "exact";
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  std::vector<CheckRecord> checks;
  Json results = Json::object();
  std::optional<double> duration_s;

  // Records with status Info never make a report fail.
  bool passed() const;
  void add(std::string claim, bool ok, Json measured, Json expected, std::string method = "exact");
  void info(std::string claim, Json measured, Json expected = nullptr, std::string method = "numeric");

  Json to_json() const;
};

std::string to_csv(const std::vector<Report>& reports);

}  // namespace thetalab
