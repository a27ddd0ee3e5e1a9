#pragma once

#include <cstdint>

#include "report.hpp"

namespace gevrey::cli {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  // First failing instance, for reproduction.
  std::string counterexample;
};

// Randomized algebraic properties; identical seeds give identical runs.
std::vector<PropertyResult> selftest(std::uint64_t seed, int trials);
json to_json(const std::vector<PropertyResult>& r);

}  // namespace gevrey::cli
