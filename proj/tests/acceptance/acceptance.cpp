#include <iostream>

#include "sfab/checks.hpp"

int main() {
  int failed = 0;
  sfab::run_checks(sfab::Suite::Full, {}, [&](const sfab::CheckResult& r) {
    std::cout << sfab::summary_line(r) << std::endl;
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    if (!r.pass) ++failed;
  });
  std::cout << (sfab::kCriteria - failed) << "/" << sfab::kCriteria << " criteria passed\n";
  return failed ? 1 : 0;
}
