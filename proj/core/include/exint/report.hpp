#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace exint {

using Json = nlohmann::ordered_json;

inline constexpr const char* kStatusPass = "exact-pass";
inline constexpr const char* kStatusFail = "fail";
inline constexpr const char* kStatusError = "error";

inline constexpr const char* kLabelProven = "PROVEN-IN-PAPER";
inline constexpr const char* kLabelEmpirical = "EMPIRICAL";

// One verified identity (or one failure).  `witness` carries whatever makes
// the outcome reproducible: measured constants, resolved conventions, the
// first offending entry on a failure.
struct CheckResult {
  std::string check;
  Json params = Json::object();
  std::string status = kStatusPass;
  std::string label = kLabelProven;
  Json witness = Json::object();
  long long millis = -1;  // filled by the CLI when timing is requested

  bool passed() const { return status == kStatusPass; }
  Json to_json(bool with_timing) const;

  void fail(const std::string& key, const Json& detail) {
    status = kStatusFail;
    witness[key] = detail;
  }
  void note(const std::string& key, const Json& detail) { witness[key] = detail; }
};

struct SuiteReport {
  std::string suite;
  Json config = Json::object();
  std::vector<CheckResult> checks;

  bool all_passed() const;
  Json to_json(bool with_timing) const;
};

}  // namespace exint
