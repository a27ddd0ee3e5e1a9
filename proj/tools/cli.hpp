#pragma once

#include <ostream>

namespace gevrey::cli {

// Exit codes: 0 success, 2 input error, 1 deficiency under --strict.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gevrey::cli
