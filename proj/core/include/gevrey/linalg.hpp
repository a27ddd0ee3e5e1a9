#pragma once

#include <optional>
#include <vector>

#include "gevrey/ratfun.hpp"

namespace gevrey {

// Incremental row reduction over Q(t): feed vectors one at a time and
// obtain the first linear dependency among them.
class DependencyFinder {
 public:
  explicit DependencyFinder(std::size_t dim) : dim_(dim) {}
  // Returns c with sum_k c_k v_k = 0 and c_last = 1 once v depends on earlier inputs.
  std::optional<std::vector<RatFun>> push(std::vector<RatFun> v);
  std::size_t count() const { return count_; }

 private:
  struct Row {
    std::vector<RatFun> v, combo;
    std::size_t pivot;
  };
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

}  // namespace gevrey
