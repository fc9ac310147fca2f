#ifndef CALIB_CERTIFICATE_HPP
#define CALIB_CERTIFICATE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace calib {

inline constexpr const char* kToolVersion = "1.0.0";

// One machine-checked claim: a stable id, what was computed, what was
// expected, and whether they agree exactly.
struct Certificate {
  std::string id;
  std::string description;
  std::string computed;
  std::string expected;
  bool pass = false;

  bool operator==(const Certificate&) const = default;
};

struct RunReport {
  std::string tool_version;
  std::string suite;
  std::vector<Certificate> certificates;
  bool overall = false;
  std::int64_t duration_ms = 0;

  bool operator==(const RunReport&) const = default;
};

RunReport make_report(std::string suite, std::vector<Certificate> certs, std::int64_t duration_ms);

// Deterministic apart from duration_ms; round-trips losslessly.
std::string report_to_json(const RunReport& rep);
RunReport report_from_json(const std::string& text);

// Fixed-width human-readable table, one line per certificate.
void print_report(const RunReport& rep, std::ostream& os);

}  // namespace calib

#endif
