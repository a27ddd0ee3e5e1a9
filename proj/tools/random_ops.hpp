#pragma once

#include <random>

#include "gevrey/difference.hpp"
#include "gevrey/puiseux.hpp"
#include "gevrey/recurrence.hpp"
#include "gevrey/weyl.hpp"

namespace gevrey::cli {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat random_rat(Rng& rng, long num = 5, long den = 3) {
  return rat(uniform(rng, -num, num), uniform(rng, 1, den));
}

inline Rat random_nonzero_rat(Rng& rng, long num = 5, long den = 3) {
  Rat r;
  while (r == 0) r = random_rat(rng, num, den);
  return r;
}

// Roughly half the coefficients zero, leading coefficient nonzero.
inline Poly random_poly(Rng& rng, int degree, long num = 5, long den = 3) {
  std::vector<Rat> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c)
    if (uniform(rng, 0, 1)) x = random_rat(rng, num, den);
  c.back() = random_nonzero_rat(rng, num, den);
  return Poly(std::move(c));
}

inline DiffOp random_diffop(Rng& rng, int max_order = 3, int max_degree = 3) {
  int order = static_cast<int>(uniform(rng, 0, max_order));
  std::vector<Poly> c;
  for (int i = 0; i <= order; ++i) {
    if (i < order && uniform(rng, 0, 2) == 0) {
      c.emplace_back();
      continue;
    }
    c.push_back(random_poly(rng, static_cast<int>(uniform(rng, 0, max_degree))));
  }
  return DiffOp(std::move(c));
}

inline DifferenceOp random_difference_op(Rng& rng, int max_order = 2, int max_degree = 2) {
  int order = static_cast<int>(uniform(rng, 0, max_order));
  std::vector<Poly> c;
  for (int i = 0; i <= order; ++i) c.push_back(random_poly(rng, static_cast<int>(uniform(rng, 0, max_degree))));
  return DifferenceOp(std::move(c));
}

// Integer coefficients so that the recurrence is already normalized up to content.
inline Recurrence random_recurrence(Rng& rng, int max_order = 3, int max_degree = 3) {
  int order = static_cast<int>(uniform(rng, 1, max_order));
  std::vector<Poly> c;
  for (int i = 0; i <= order; ++i) {
    if (i > 0 && i < order && uniform(rng, 0, 2) == 0) {
      c.emplace_back();
      continue;
    }
    c.push_back(random_poly(rng, static_cast<int>(uniform(rng, 0, max_degree)), 6, 1));
  }
  return Recurrence(c);
}

}  // namespace gevrey::cli
