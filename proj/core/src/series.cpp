#include "gevrey/series.hpp"

#include <algorithm>

namespace gevrey {

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_add(const Series& a, const Series& b) {
  Series out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Series series_scale(const Series& a, const Rat& s) {
  Series out = a;
  for (auto& c : out) c *= s;
  return out;
}

Series series_inverse(const Series& a, std::size_t order) {
  if (a.empty() || a[0] == 0) throw Error("series_inverse needs a nonzero constant term");
  Series out(order + 1);
  Rat inv = 1 / a[0];
  out[0] = inv;
  for (std::size_t n = 1; n <= order; ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * out[n - k];
    out[n] = -acc * inv;
  }
  return out;
}

Series poly_compose_truncated(const Series& f, const Series& g, std::size_t order) {
  if (!g.empty() && g[0] != 0) throw Error("composition needs g(0) = 0");
  Series acc(order + 1);
  std::size_t top = std::min(f.size(), order + 1);
  for (std::size_t k = top; k-- > 0;) {
    acc = series_mul(acc, g, order);
    acc[0] += f[k];
  }
  return acc;
}

Series exp_series(const Rat& a, std::size_t order) {
  Series out(order + 1);
  Rat term = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = term;
    term *= a;
    term /= Rat(static_cast<long>(n + 1));
  }
  return out;
}

Series log_one_over_one_minus(std::size_t order) {
  Series out(order + 1);
  for (std::size_t n = 1; n <= order; ++n) out[n] = Rat(1, static_cast<long>(n));
  return out;
}

Series one_minus_exp_neg(std::size_t order) {
  Series out = series_scale(exp_series(-1, order), -1);
  out[0] += 1;
  return out;
}

}  // namespace gevrey
