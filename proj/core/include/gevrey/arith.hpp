#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gevrey/recurrence.hpp"
#include "gevrey/weyl.hpp"

namespace gevrey {

struct SequenceWindow {
  std::vector<Rat> terms;
  std::string provenance;
};

Recurrence operator_to_recurrence(const DiffOp& op);
// Natural inverse image sum_i z^{r-i} P_i(T - i), stripped and normalized.
// It annihilates sum a_n z^n up to a polynomial of degree < r.
DiffOp recurrence_to_operator(const Recurrence& r);
// Also kills the boundary polynomial of the sequence generated from inits.
DiffOp recurrence_to_operator(const Recurrence& r, const std::vector<Rat>& inits);
// Coefficients b_e (e < r) of the boundary polynomial for the given terms.
std::vector<Rat> boundary_terms(const Recurrence& r, const std::vector<Rat>& terms);

// Exact forward recursion producing a_0..a_N.
SequenceWindow generate(const Recurrence& r, const std::vector<Rat>& inits, std::size_t N);
// Recurrence for a_n / (n!)^p.
Recurrence order_shift(const Recurrence& r, int p);

struct SectionResult {
  Recurrence recurrence;
  // Set when inits were supplied: the section of the generated window
  // satisfies the new recurrence over the checked range.
  std::optional<bool> validated;
};
SectionResult section(const Recurrence& r, unsigned u, unsigned v,
                      const std::vector<Rat>& inits = {}, std::size_t check_terms = 60);

SequenceWindow hadamard(const SequenceWindow& a, const SequenceWindow& b);
SequenceWindow cauchy(const SequenceWindow& a, const SequenceWindow& b);

struct GevreyThresholds {
  // Verdict "bounded" requires the slope of rate against log n over the
  // tail to stay below this value.
  double growth_slope = 0.5;
  std::optional<double> max_log_rate;
};

struct GevreyReport {
  Rat s;
  std::size_t window = 0;      // N
  std::size_t tail_start = 0;  // n0
  double order_estimate = 0;
  Rat order_snapped;
  // Indexed by n; entry 0 unused. Magnitude entries for zero terms are NaN.
  std::vector<double> denominator_rates, magnitude_rates;
  double denominator_tail_max = 0, magnitude_tail_max = 0;
  double denominator_slope = 0, magnitude_slope = 0;
  bool denominators_bounded = false, magnitudes_bounded = false;
  // exp(tail max): the geometric constants achieved on the window.
  double denominator_constant = 0, magnitude_constant = 0;
  bool bounded() const { return denominators_bounded && magnitudes_bounded; }
};

// b_n = a_n / (floor(n/q)!)^p with s = p/q.
std::vector<Rat> gevrey_normalize(const std::vector<Rat>& a, const Rat& s);
GevreyReport condition_G_report(const SequenceWindow& w, const Rat& s,
                                const GevreyThresholds& th = {});
// Least-squares estimate of s from log|a_n| ~ s n log n + b n + c log n + d.
double estimate_gevrey_order(const std::vector<Rat>& a, std::size_t from);
Rat snap_rational(double x, int max_den = 6);

struct RateSummary {
  std::vector<double> rates;  // index n (0 unused)
  std::size_t tail_start = 0;
  double tail_max = 0;
  double slope = 0;
  bool bounded = false;
};
// (1/n) log of the running lcm of denominators.
RateSummary denominator_rates(const std::vector<Rat>& a, const GevreyThresholds& th = {});

struct PochhammerGrowth {
  std::vector<Rat> values;  // (a)_n / (b)_n
  RateSummary denominators;
};
PochhammerGrowth pochhammer_growth(const Rat& a, const Rat& b, std::size_t N);

struct GalochkinReport {
  std::vector<Integer> denominators;  // d_1..d_N at index m (index 0 = 1)
  RateSummary rates;
  // Q_{m,j} for the last m, lowest j first.
  std::vector<Poly> last_coefficients;
};
GalochkinReport galochkin_sequence(const DiffOp& op, std::size_t N,
                                   const GevreyThresholds& th = {});
// Q_{m,j} (j < order) for one m, computed directly by right division.
std::vector<Poly> galochkin_by_division(const DiffOp& op, unsigned m);

}  // namespace gevrey
