#include "thetalab/report.hpp"

namespace thetalab {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Info: return "info";
  }
  return "?";
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

void Report::add(std::string claim, bool ok, Json measured, Json expected, std::string method) {
  checks.push_back({std::move(claim), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(measured),
                    std::move(expected), std::move(method)});
}

void Report::info(std::string claim, Json measured, Json expected, std::string method) {
  checks.push_back({std::move(claim), CheckStatus::Info, std::move(measured), std::move(expected), std::move(method)});
}

Json Report::to_json() const {
  Json j;
  j["schema"] = "1";
  j["command"] = command;
  j["parameters"] = parameters;
  j["status"] = passed() ? "pass" : "fail";
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json r;
    r["claim"] = c.claim;
    r["status"] = to_string(c.status);
    r["measured"] = c.measured;
    r["expected"] = c.expected;
    r["method"] = c.method;
    arr.push_back(std::move(r));
  }
  j["checks"] = std::move(arr);
  j["results"] = results;
  if (duration_s) j["duration_s"] = *duration_s;
  return j;
}

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

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string to_csv(const std::vector<Report>& reports) {
  std::string out = "command,claim,status,measured,expected,method\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out += csv_field(r.command) + "," + csv_field(c.claim) + "," + to_string(c.status) + "," +
             csv_field(scalar(c.measured)) + "," + csv_field(scalar(c.expected)) + "," + c.method + "\n";
    }
  }
  return out;
}

}  // namespace thetalab
