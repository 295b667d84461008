#ifndef UDEFORM_SUITE_HPP
#define UDEFORM_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace udeform {

struct SuiteRow {
  int criterion;
  std::string name;
  bool pass;
  int unknown;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int threads = 1;
  bool strict = false;
  std::vector<SuiteRow> rows;

  bool pass() const;
  std::string json() const;
};

/// Runs the full acceptance battery. Output depends only on the seed:
/// probe values are counter-derived and aggregation order is fixed, so
/// the JSON is bit-identical across runs and thread counts (the last
/// battery verifies exactly that).
SuiteReport run_suite(std::uint64_t seed, int threads = 1, bool strict = false);

}  // namespace udeform

#endif
