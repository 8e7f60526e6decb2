#ifndef ORTHOCHART_REPORT_HPP_
#define ORTHOCHART_REPORT_HPP_

#include <json.hpp>

#include <string>

#include "orthochart/verifier.hpp"

namespace orthochart {

/// JSON form of a suite. Everything except the top-level "timing" object
/// is deterministic for fixed inputs, budgets and modulus.
nlohmann::json report_json(const SuiteReport& report);
/// report_json without the timing section.
nlohmann::json comparable_json(const SuiteReport& report);

/// One "CHECK name: PASS|FAIL (witness)" line per check, grouped by chart.
std::string report_text(const SuiteReport& report);

/// Serializes to `path` ("-" or empty: stdout). Throws IoError when the
/// path cannot be written.
void emit_report(const std::string& body, const std::string& path);

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthochart

#endif  // ORTHOCHART_REPORT_HPP_
