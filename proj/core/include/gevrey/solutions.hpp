#pragma once

#include <map>
#include <string>
#include <vector>

#include "gevrey/newton.hpp"
#include "gevrey/puiseux.hpp"

namespace gevrey {

// e^{-zeta z} times series. At infinity series is in z^{-1} with z^{-alpha}
// leading behaviour; at a finite point it is in w = z - a.
struct FormalSolution {
  Rat zeta;
  Rat alpha;
  int log_degree = 0;
  PuiseuxLogSeries series;
};

struct FormalSolutionBasis {
  Point at;
  std::vector<FormalSolution> solutions;
  int expected = 0;  // order of the operator
  bool deficient = false;
  std::vector<std::string> notes;

  std::map<Rat, std::vector<std::size_t>> groups() const;
};

// Frobenius basis in w = z - a through w^{alpha + N}.
FormalSolutionBasis frobenius_basis(const DiffOp& op, const Rat& at, std::size_t N);

// Solutions e^{-zeta z} z^{-alpha} sum c_{n,k} z^{-n} log^k z for operators
// whose slopes at infinity lie in {0, 1}.
FormalSolutionBasis infinity_basis(const DiffOp& op, std::size_t N);

// Operator annihilating the series part of solutions in the zeta group.
DiffOp part_operator(const DiffOp& op, const Rat& zeta);

struct DualityPair {
  std::string label;
  std::vector<Rat> left, right;  // non-integer classes in [0, 1)
  bool equal = false;
};
struct DualityReport {
  std::vector<DualityPair> pairs;
  std::vector<std::string> notes;
  bool ok() const;
};
DualityReport duality_exponent_check(const DiffOp& op, std::size_t N = 20);

struct PCurvatureReport {
  unsigned long p = 0;
  // entries num/den with coefficients in [0, p), lowest degree first
  struct Entry {
    std::vector<unsigned long> num, den;
  };
  std::vector<std::vector<Entry>> matrix;
  bool nilpotent = false;
  int nilpotency_index = 0;  // 0 when not nilpotent
  bool zero() const;
};
PCurvatureReport p_curvature(const DiffOp& op, unsigned long p);
std::string to_string(const PCurvatureReport::Entry& e);

}  // namespace gevrey
