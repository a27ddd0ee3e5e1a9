#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gevrey/puiseux.hpp"
#include "gevrey/series.hpp"
#include "gevrey/weyl.hpp"

namespace gevrey {

// F = sum c_n z^n  ->  F^+ = sum n! c_n z^{-n-1}; entry n of the result is
// the coefficient of z^{-n-1}.
Series laplace_series(const Series& F);
// Formal Borel transform, the inverse of laplace_series.
Series borel_series(const Series& plus);
// Coefficients of z^{-n-1} as a series at infinity with exponent -n-1.
PuiseuxLogSeries plus_side(const Series& plus);

// (z^alpha log^k z)^+ as a finite expansion at infinity carried by
// z^{-alpha-1}. At alpha in {-1, -2, ...} the log degree rises to k + 1.
PuiseuxLogSeries laplace_puiseux(const Rat& alpha, int k);

// Termwise transform of an expansion at 0 with rational coefficients.
PuiseuxLogSeries laplace_full(const PuiseuxLogSeries& y);
// Inverse on the image; throws on input outside it.
PuiseuxLogSeries laplace_inverse(const PuiseuxLogSeries& plus);

struct LaplacePair {
  PuiseuxLogSeries f_side, plus_side;
};
LaplacePair laplace_pair(const PuiseuxLogSeries& y);

// rho_{m,j} in the basis rho_{0,0..K} (Rho seeds at alpha, index i), for
// the log-degree-K family attached to z^{alpha+m}. Rows beyond an index with
// alpha + m = 0 are absent.
struct RhoTable {
  Rat alpha;
  int K = 0;
  std::map<int, std::vector<SeedCombo>> rows;
  std::vector<int> flagged;
};
RhoTable rho_table(const Rat& alpha, int K, int M);

// sum_{m=0}^n (-1)^m / (m! (n-m)!) / (m + alpha + 1)
Rat partie_finie_sum(const Rat& alpha, unsigned n);

// Symmetrized transform of the operator killing F^+ for a solution f of op.
DiffOp build_E_operator(const DiffOp& op);
// Operator for y(z^{-s}) when op kills y.
DiffOp recalibrate(const DiffOp& op, const Rat& s);

}  // namespace gevrey
