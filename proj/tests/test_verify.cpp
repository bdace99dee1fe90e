#include "doctest.h"

#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "tpl/verify.hpp"

using namespace tpl;

TEST_CASE("check_stream is the reference byte hash") {
  // FNV-1a with the standard 64-bit offset basis and prime.
  CHECK(check_stream("") == 14695981039346656037ULL);
  CHECK(check_stream("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(check_stream("laplace:tpl") != check_stream("laplace:tps"));
  CHECK(check_stream("x") == check_stream("x"));
}

TEST_CASE("control rows are recognized by prefix") {
  mc_report r;
  r.name = "control:mean-shift";
  CHECK(is_control(r));
  r.name = "laplace:tpl[0.5,1,2,1]:s=1";
  CHECK(!is_control(r));
  r.name = "prefix control:late";
  CHECK(!is_control(r));
}

TEST_CASE("report lines round-trip through the text format") {
  std::vector<mc_report> rows(2);
  rows[0].name = "alpha:one";
  rows[0].statistic = 1.0 / 3.0;
  rows[0].target = 0.3333;
  rows[0].tolerance = 1e-3;
  rows[0].n = 12345;
  rows[0].pass = true;
  rows[0].seed = 42;
  rows[1].name = "control:bad";
  rows[1].statistic = -1.7e-300;
  rows[1].target = 0.0;
  rows[1].tolerance = 1e-17;
  rows[1].n = 1;
  rows[1].pass = false;
  rows[1].seed = 20260822;

  std::ostringstream os;
  write_reports(os, rows);
  std::istringstream is(os.str());
  const std::vector<mc_report> back = parse_reports(is);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].name == rows[i].name);
    CHECK(back[i].statistic == rows[i].statistic);
    CHECK(back[i].target == rows[i].target);
    CHECK(back[i].tolerance == rows[i].tolerance);
    CHECK(back[i].n == rows[i].n);
    CHECK(back[i].pass == rows[i].pass);
    CHECK(back[i].seed == rows[i].seed);
  }
}

TEST_CASE("malformed report lines are rejected") {
  std::istringstream is("only three\tfields\there\n");
  CHECK_THROWS_AS(parse_reports(is), std::runtime_error);
}

TEST_CASE("suite_ok demands passing checks and failing controls") {
  mc_report good;
  good.name = "check:a";
  good.pass = true;
  mc_report bad_check = good;
  bad_check.name = "check:b";
  bad_check.pass = false;
  mc_report control_fail;
  control_fail.name = "control:planted";
  control_fail.pass = false;
  mc_report control_pass = control_fail;
  control_pass.pass = true;

  CHECK(suite_ok({good, control_fail}));
  CHECK(!suite_ok({good, bad_check, control_fail}));
  CHECK(!suite_ok({good, control_pass}));
  CHECK(!suite_ok({}));
}

TEST_CASE("reduced-scale suite runs clean end to end") {
  suite_config cfg;
  cfg.scale = 0.1;  // the quick preset used by the command line tool
  const std::vector<mc_report> rows = run_suite(cfg);
  REQUIRE(!rows.empty());

  std::unordered_set<std::string> names;
  int controls = 0;
  for (const mc_report& r : rows) {
    CHECK(names.insert(r.name).second);  // names must be unique
    if (is_control(r)) {
      ++controls;
      CHECK(!r.pass);
    } else {
      CHECK(r.pass);
    }
    CHECK(r.seed == cfg.seed);
  }
  CHECK(controls == 3);
  CHECK(suite_ok(rows));

  // The wire format survives a round trip for the whole suite.
  std::ostringstream os;
  write_reports(os, rows);
  std::istringstream is(os.str());
  const std::vector<mc_report> back = parse_reports(is);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].name == rows[i].name);
    CHECK(back[i].statistic == rows[i].statistic);
    CHECK(back[i].pass == rows[i].pass);
  }
}

TEST_CASE("suite output is reproducible for a fixed seed") {
  suite_config cfg;
  cfg.scale = 0.01;
  std::ostringstream a, b;
  write_reports(a, run_suite(cfg));
  write_reports(b, run_suite(cfg));
  CHECK(a.str() == b.str());
}
