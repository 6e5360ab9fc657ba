#include "doctest.h"
#include "dtg/error.hpp"
#include "dtg/report.hpp"
#include "dtg/suites.hpp"

using namespace dtg;

TEST_CASE("check outcomes") {
  Report r;
  r.suite = "t";
  CHECK(r.check("a", "here", 3, 3).status == Status::Pass);
  CHECK(r.check("b", "here", 3, 4).status == Status::Fail);
  CHECK(r.check("c", "here", 3, 4, "stated", true).status == Status::Warn);
  r.skip("d", "here", "too big");
  CHECK(r.count(Status::Pass) == 1);
  CHECK(r.count(Status::Fail) == 1);
  CHECK(r.count(Status::Warn) == 1);
  CHECK(r.count(Status::Skipped) == 1);
  CHECK(r.has_fail());
}

TEST_CASE("exceptions become failing cases") {
  Report r;
  run_case(r, "boom", "x", [] { throw Error("bad thing"); });
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0].status == Status::Fail);
  CHECK(r.cases[0].note.find("bad thing") != std::string::npos);
}

TEST_CASE("json and text rendering") {
  Report r;
  r.suite = "t";
  r.check("a", "loc", json::array({1, 2}), json::array({1, 2}));
  auto j = r.to_json(false);
  CHECK(j["suite"] == "t");
  CHECK(j["cases"].size() == 1);
  CHECK(j["cases"][0]["status"] == "PASS");
  CHECK_FALSE(j["cases"][0].contains("seconds"));
  CHECK(r.to_text().find("PASS") != std::string::npos);
  Report o;
  o.check("z", "loc", 1, 1);
  r.merge(o);
  CHECK(r.cases.size() == 2);
}

TEST_CASE("suite registry") {
  auto names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "lemmas") != names.end());
  CHECK_THROWS_AS(run_suite("nope", {}), Error);
  Report l = run_suite("lemmas", {});
  CHECK_FALSE(l.has_fail());
}
