#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsp4/dualgroups.hpp"
#include "gsp4/matrix.hpp"
#include "scenario.hpp"

namespace gsp4::cli {

// Plain-text lines plus a machine-readable record list. Contents depend only on the
// inputs and the seed.
struct Report {
  std::vector<std::string> lines;
  nlohmann::json records = nlohmann::json::array();
  bool failed = false;

  void add(std::string line) { lines.push_back(std::move(line)); }
  // Appends "PASS name: detail" or "FAIL name: detail".
  void check(const std::string& name, bool ok, const std::string& detail = "");
  void append(const Report& other);
  std::string text() const;
  nlohmann::json to_json(std::uint64_t seed) const;
};

enum ExitCode { kOk = 0, kCheckFailed = 1, kInputError = 2 };

// Throws InputError on a malformed request.
Report run_scenario(const Scenario& s, std::uint64_t seed);

Report verify_endoscopy(std::uint64_t seed);
// verbose: one line per Weyl element, else one line per Levi.
Report enumerate_weyl(const GroupTag& group, bool verbose);
// {"gram": [[...]], "g": [[...]]}
Report factor_involution(const nlohmann::json& input);

struct SelftestOptions {
  std::uint64_t seed = 1;
  int involution_samples = 25;  // per dimension
  bool corrupt_catalog = false;  // fault injection for tests
};
Report selftest(const SelftestOptions& opts);

}  // namespace gsp4::cli
