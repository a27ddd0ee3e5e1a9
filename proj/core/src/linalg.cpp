#include "gevrey/linalg.hpp"

#include <algorithm>

namespace gevrey {

std::optional<std::vector<RatFun>> DependencyFinder::push(std::vector<RatFun> v) {
  if (v.size() != dim_) throw Error("dependency search with mismatched dimension");
  std::size_t k = count_++;
  std::vector<RatFun> combo(k + 1);
  combo[k] = RatFun(1);
  for (const auto& row : rows_) {
    if (v[row.pivot].is_zero()) continue;
    RatFun f = v[row.pivot];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!row.v[j].is_zero()) v[j] -= f * row.v[j];
    for (std::size_t j = 0; j < row.combo.size(); ++j)
      if (!row.combo[j].is_zero()) combo[j] -= f * row.combo[j];
  }
  auto piv = std::find_if(v.begin(), v.end(), [](const RatFun& x) { return !x.is_zero(); });
  if (piv == v.end()) return combo;
  std::size_t p = static_cast<std::size_t>(piv - v.begin());
  RatFun inv = RatFun(1) / v[p];
  for (auto& x : v) x *= inv;
  for (auto& x : combo) x *= inv;
  for (auto& row : rows_) {
    if (row.v[p].is_zero()) continue;
    RatFun f = row.v[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!v[j].is_zero()) row.v[j] -= f * v[j];
    row.combo.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      if (!combo[j].is_zero()) row.combo[j] -= f * combo[j];
  }
  rows_.push_back({std::move(v), std::move(combo), p});
  return std::nullopt;
}

}  // namespace gevrey
