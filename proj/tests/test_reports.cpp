#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include "calib/certificate.hpp"
#include "calib/suites.hpp"

using namespace calib;

TEST_CASE("report assembly aggregates certificate outcomes") {
  Certificate good{"a.one", "first", "1", "1", true};
  Certificate bad{"a.two", "second", "2", "3", false};

  RunReport all_good = make_report("demo", {good}, 12);
  CHECK(all_good.overall);
  CHECK(all_good.tool_version == kToolVersion);
  CHECK(all_good.suite == "demo");
  CHECK(all_good.duration_ms == 12);

  RunReport mixed = make_report("demo", {good, bad}, 0);
  CHECK_FALSE(mixed.overall);

  RunReport empty = make_report("demo", {}, 0);
  CHECK(empty.overall);  // vacuous truth: nothing failed
}

TEST_CASE("report serialization round-trips losslessly") {
  RunReport rep = make_report(
      "demo",
      {Certificate{"x.y", "a description, with punctuation: [1/2]", "0", "0", true},
       Certificate{"x.z", "another", "-5/3", "-5/3", true}},
      1234);
  std::string text = report_to_json(rep);
  RunReport back = report_from_json(text);
  CHECK(back == rep);
  CHECK(report_to_json(back) == text);
  CHECK_THROWS(report_from_json("definitely not json"));
}

TEST_CASE("printed report lists one line per certificate with a verdict") {
  RunReport rep = make_report(
      "demo", {Certificate{"p.q", "statement", "yes", "yes", true},
               Certificate{"p.r", "failing statement", "1", "2", false}},
      7);
  std::ostringstream os;
  print_report(rep, os);
  std::string text = os.str();
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("p.q") != std::string::npos);
  CHECK(text.find("demo") != std::string::npos);
}

TEST_CASE("compact model suite passes end to end") {
  RunReport rep = run_verify_suite("su3");
  CHECK(rep.overall);
  CHECK(rep.suite == "su3");
  CHECK_FALSE(rep.certificates.empty());
  for (const Certificate& c : rep.certificates) {
    CHECK(c.pass);
    CHECK(c.computed == c.expected);
  }
  CHECK_THROWS_AS(run_verify_suite("nonsense"), std::invalid_argument);
}

TEST_CASE("identity suite is exact on small seeded batches") {
  IdentityOptions opt;
  opt.samples = 10;
  opt.seed = 5;
  RunReport rep = run_identity_suite(opt);
  CHECK(rep.overall);
  CHECK(rep.certificates.size() == 2);

  IdentityOptions only7;
  only7.samples = 3;
  only7.run_n8 = false;
  RunReport rep7 = run_identity_suite(only7);
  CHECK(rep7.certificates.size() == 1);
  CHECK(rep7.overall);
}
