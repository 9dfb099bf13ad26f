#pragma once

// Seeded property suites over the duality, orthogonality, isometry and
// characteristic laws. Each suite returns one record per check; records are
// sorted by name so reports are byte-stable for a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

namespace gaugekit::laws {

struct CheckRecord {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct RunReport {
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  int exit_code() const { return all_passed() ? 0 : 1; }
  void sort();
};

std::vector<std::string> suite_names();
// Throws InvalidInput for an unknown suite; "all" runs every suite.
RunReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace gaugekit::laws
