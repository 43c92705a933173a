#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sfab/context.hpp"

namespace sfab {

enum class Suite { Quick, Full };

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0;
  std::vector<std::string> failures;  // one entry per violated identity instance

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 50) failures.push_back(std::move(what));
  }
};

// Pinned tolerances.
inline constexpr double kOrthogonalityTol = 1e-8;
inline constexpr double kNegativeControlGap = 1e-3;
inline constexpr double kTripleTol = 1e-8;
inline constexpr double kPowerIterationRel = 0.01;
inline constexpr double kSupSlack = 1e-12;
inline constexpr double kNearOneTol = 1e-3;

constexpr int kCriteria = 10;
CheckResult run_check(int id, Suite suite);
std::vector<CheckResult> run_checks(Suite suite, const std::vector<int>& ids = {},
                                    const std::function<void(const CheckResult&)>& each = {});
std::string summary_line(const CheckResult& r);

// Valid parameters with a distinct prime per conjugacy class.
std::map<int, mpq_class> generic_parameters(const std::string& type, int rank);

}  // namespace sfab
