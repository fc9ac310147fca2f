#include "calib/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace calib {

RunReport make_report(std::string suite, std::vector<Certificate> certs, std::int64_t duration_ms) {
  RunReport rep;
  rep.tool_version = kToolVersion;
  rep.suite = std::move(suite);
  rep.certificates = std::move(certs);
  rep.overall = std::all_of(rep.certificates.begin(), rep.certificates.end(),
                            [](const Certificate& c) { return c.pass; });
  rep.duration_ms = duration_ms;
  return rep;
}

std::string report_to_json(const RunReport& rep) {
  nlohmann::ordered_json j;
  j["tool_version"] = rep.tool_version;
  j["suite"] = rep.suite;
  j["overall"] = rep.overall;
  j["duration_ms"] = rep.duration_ms;
  j["certificates"] = nlohmann::ordered_json::array();
  for (const Certificate& c : rep.certificates) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["computed"] = c.computed;
    jc["expected"] = c.expected;
    jc["pass"] = c.pass;
    j["certificates"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  RunReport rep;
  rep.tool_version = j.at("tool_version").get<std::string>();
  rep.suite = j.at("suite").get<std::string>();
  rep.overall = j.at("overall").get<bool>();
  rep.duration_ms = j.at("duration_ms").get<std::int64_t>();
  for (const auto& jc : j.at("certificates")) {
    Certificate c;
    c.id = jc.at("id").get<std::string>();
    c.description = jc.at("description").get<std::string>();
    c.computed = jc.at("computed").get<std::string>();
    c.expected = jc.at("expected").get<std::string>();
    c.pass = jc.at("pass").get<bool>();
    rep.certificates.push_back(c);
  }
  return rep;
}

void print_report(const RunReport& rep, std::ostream& os) {
  os << "suite " << rep.suite << " (tool " << rep.tool_version << ")\n";
  std::size_t width = 0;
  for (const Certificate& c : rep.certificates) width = std::max(width, c.id.size());
  for (const Certificate& c : rep.certificates) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
    for (std::size_t i = c.id.size(); i < width + 2; ++i) os << ' ';
    os << c.description << "  [computed " << c.computed << ", expected " << c.expected << "]\n";
  }
  os << (rep.overall ? "OVERALL PASS" : "OVERALL FAIL") << " (" << rep.certificates.size()
     << " certificates, " << rep.duration_ms << " ms)\n";
}

}  // namespace calib
