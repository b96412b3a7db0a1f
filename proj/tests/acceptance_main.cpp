// Acceptance runner: executes every verification suite at the default seed
// and prints one pass/fail line per criterion.

#include <cstdio>

#include "teamai/verify.hpp"

int main() {
  const auto results = teamai::run_all_verify_suites(teamai::kDefaultVerifySeed);
  int failed = 0;
  int index = 0;
  for (const auto& res : results) {
    ++index;
    std::printf("[%2d/%zu] %s %-12s (%lld checks, %.2fs) %s\n", index,
                results.size(), res.pass ? "PASS" : "FAIL", res.name.c_str(),
                static_cast<long long>(res.checks), res.seconds,
                res.pass ? res.title.c_str() : res.detail.c_str());
    if (!res.pass) ++failed;
  }
  if (failed) {
    std::printf("%d of %zu criteria failed\n", failed, results.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", results.size());
  return 0;
}
