#pragma once

#include <vector>

#include "gevrey/rat.hpp"

namespace gevrey {

// Truncated power series: coefficient index = degree, entries 0..N.
using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b, std::size_t order);
Series series_add(const Series& a, const Series& b);
Series series_scale(const Series& a, const Rat& s);
// 1/a for a(0) != 0.
Series series_inverse(const Series& a, std::size_t order);
// f(g) through z^order; g(0) must vanish.
Series poly_compose_truncated(const Series& f, const Series& g, std::size_t order);

Series exp_series(const Rat& a, std::size_t order);   // e^{a z}
Series log_one_over_one_minus(std::size_t order);     // log 1/(1-z)
Series one_minus_exp_neg(std::size_t order);          // 1 - e^{-w}

}  // namespace gevrey
