#include "exint/report.hpp"

namespace exint {

Json CheckResult::to_json(bool with_timing) const {
  Json j;
  j["check"] = check;
  j["params"] = params;
  j["status"] = status;
  j["label"] = label;
  if (!witness.empty()) j["witness"] = witness;
  if (with_timing && millis >= 0) j["millis"] = millis;
  return j;
}

bool SuiteReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

Json SuiteReport::to_json(bool with_timing) const {
  Json j;
  j["suite"] = suite;
  j["config"] = config;
  Json arr = Json::array();
  long passed = 0, failed = 0, errored = 0;
  for (const auto& c : checks) {
    arr.push_back(c.to_json(with_timing));
    if (c.status == kStatusPass) {
      ++passed;
    } else if (c.status == kStatusFail) {
      ++failed;
    } else {
      ++errored;
    }
  }
  j["checks"] = arr;
  j["summary"] = Json{{"total", checks.size()},
                      {"passed", passed},
                      {"failed", failed},
                      {"errored", errored}};
  return j;
}

}  // namespace exint
