#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tpl {

// One verification row.  Band rows (k > 0) pass iff
// |statistic - target| <= k * tolerance.  Threshold rows (k == 0, used for
// p-values and one-sided bounds) pass iff statistic > target.  Rows whose
// name starts with "control:" are planted defects; the suite demands that
// they FAIL, as a check on its own power.
struct mc_report {
  std::string name;
  double statistic = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  std::int64_t n = 0;
  bool pass = false;
  std::uint64_t seed = 0;
  double k = 3.0;
};

bool is_control(const mc_report& r);

struct suite_config {
  std::uint64_t seed = 20260822;
  // Multiplies every Monte Carlo sample count; the quick variant uses 0.1.
  double scale = 1.0;
};

// Runs the full battery; a pure function of the config.  Statistical band
// rows use k = 4 because the suite runs well over fifty of them (family-wise
// allowance); deterministic identity rows use k = 1 with an explicit
// tolerance.
std::vector<mc_report> run_suite(const suite_config& cfg);

// True iff every regular row passes and every control row fails.
bool suite_ok(const std::vector<mc_report>& reports);

// One row per line, tab-separated: name statistic target tolerance n pass
// seed.  Doubles carry 17 significant digits so parsing round-trips; k is
// not part of the wire format.
void write_reports(std::ostream& os, const std::vector<mc_report>& reports);
std::vector<mc_report> parse_reports(std::istream& is);

// Stream id for a named check or sample set: FNV-1a of the name.  Exposed so
// single checks can be reproduced outside the suite.
std::uint64_t check_stream(const std::string& name);

}  // namespace tpl
