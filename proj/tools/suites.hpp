#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace gevrey::cli {

struct SuiteResult {
  std::string name;
  json report;
  // Every check in the suite held.
  bool ok = false;
  // Some basis came back short of the operator order.
  bool deficient = false;
};

const std::vector<std::string>& suite_names();
// Throws Error for an unknown name.
SuiteResult run_suite(const std::string& name, std::size_t N);

// Operators shared with the acceptance checks.
DiffOp airy_operator();
// D^2 - (z^2/4 - 1/2 - m)
DiffOp weber_operator(const Rat& m);
// z^2 D^2 + (-z^2/4 + k z + 1/4 - m^2), unnormalized.
DiffOp whittaker_operator(const Rat& k, const Rat& m);
DiffOp euler_operator();
DiffOp intertwine_phi();
DiffOp intertwine_theta();
// G-operator whose E-operator is intertwine_phi().
DiffOp intertwine_g_operator();

}  // namespace gevrey::cli
