// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>

#include "hcd/verify.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= 12; ++id) {
    const auto r = hcd::verify::run_criterion(id);
    std::printf("[%s] criterion %2d (%s) %.2fs: %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of 12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
