#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schroder/error.hpp"
#include "schroder/verify.hpp"

using namespace schroder;

TEST_CASE("verification suite passes at small sizes") {
  const VerifyReport report = run_verification(5);
  CHECK(report.ok());
  CHECK(report.results.size() >= 20);
  for (const auto& r : report.results) {
    CAPTURE(r.name);
    CHECK(r.passed);
  }
  const std::string text = format_report(report);
  CHECK(text.find("PASS sigma.roundtrip n=0..5\n") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("report is deterministic") {
  CHECK(format_report(run_verification(4)) == format_report(run_verification(4)));
}

TEST_CASE("failures are reported with their size") {
  VerifyReport report;
  report.results.push_back({"demo", 0, 3, false, 2, "1,2"});
  CHECK_FALSE(report.ok());
  CHECK(format_report(report).find("FAIL demo n=2: 1,2\n") == 0);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(run_verification(12), LimitError);
  CHECK_THROWS_AS(run_verification(-1), PreconditionError);
}
