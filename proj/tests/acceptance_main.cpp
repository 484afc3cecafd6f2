// Runs every acceptance criterion and prints one pass/fail line per
// criterion. Exit code is nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "finloc/acceptance.hpp"

int main(int argc, char** argv) {
  long long cap = finloc::kDefaultCap;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--cap") == 0) cap = std::atoll(argv[i + 1]);

  auto results = finloc::run_suite("all", cap);
  bool all_pass = true;
  for (const auto& r : results) {
    // the gate is strict: a skipped criterion counts as a failure here
    std::printf("[%s] criterion %2d %-26s %8.1f ms  %s\n",
                r.pass ? "PASS" : r.skipped ? "SKIP" : "FAIL", r.id,
                r.name.c_str(), r.micros / 1000.0, r.detail.c_str());
    if (!r.pass) all_pass = false;
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}
