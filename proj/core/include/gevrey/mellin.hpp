#pragma once

#include <vector>

#include "gevrey/arith.hpp"
#include "gevrey/difference.hpp"
#include "gevrey/puiseux.hpp"
#include "gevrey/weyl.hpp"

namespace gevrey {

// x -> -z D, Delta -> z - 1
DiffOp mellin_operator(const DifferenceOp& xi);
// z -> Delta + 1, T -> -x; op must lie in Q[z]<T>.
DifferenceOp inverse_mellin_operator(const DiffOp& op);

// g(x) = sum b_n Gamma(x) / Gamma(x + n + rho + 1)
struct FactorialSeries {
  Rat rho;
  std::vector<Rat> b;
  // rho in {-1, -2, ...}: the Mellin series map is not injective there.
  bool degenerate() const { return is_integer(rho) && rho < 0; }
};

// (1 - z)^rho sum b_n (1 - z)^n / Gamma(n + rho + 1), expanded in w = 1 - z.
PuiseuxLogSeries mellin_series(const FactorialSeries& g);

// b -> a with sum b_n z^n/n! = F(log 1/(1-z)), F = sum a_n z^n/n!; rho = 0.
std::vector<Rat> nicole_convert(const FactorialSeries& g, std::size_t N);
FactorialSeries nicole_reverse(const std::vector<Rat>& a, std::size_t N);

// condition (G) at order s + 1 on the coefficients b_n.
GevreyReport factorial_gevrey_check(const FactorialSeries& g, const Rat& s,
                                    const GevreyThresholds& th = {});

}  // namespace gevrey
