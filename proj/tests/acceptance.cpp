// Acceptance battery: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include <udeform/suite.hpp>

int main() {
  udeform::SuiteReport report = udeform::run_suite(7, 4, false);
  bool all = true;
  for (const auto& row : report.rows) {
    bool ok = row.pass;
    all = all && ok;
    std::printf("criterion %2d %-16s %s  (%s)\n", row.criterion,
                row.name.c_str(), ok ? "PASS" : "FAIL", row.detail.c_str());
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
