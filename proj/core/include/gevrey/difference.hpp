#pragma once

#include <string>
#include <vector>

#include "gevrey/poly.hpp"

namespace gevrey {

// sum_i p_i(x) Delta^i with p_i on the left; Delta x = x Delta + Delta + 1.
class DifferenceOp {
 public:
  DifferenceOp() = default;
  explicit DifferenceOp(std::vector<Poly> coeffs);
  DifferenceOp(const Poly& p) : DifferenceOp(std::vector<Poly>{p}) {}  // NOLINT

  static DifferenceOp delta(unsigned k = 1);
  static DifferenceOp x(unsigned k = 1) { return DifferenceOp(Poly::monomial(1, k)); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Poly>& coeffs() const { return c_; }

  DifferenceOp& operator+=(const DifferenceOp& o);
  DifferenceOp& operator-=(const DifferenceOp& o);
  friend DifferenceOp operator+(DifferenceOp a, const DifferenceOp& b) { return a += b; }
  friend DifferenceOp operator-(DifferenceOp a, const DifferenceOp& b) { return a -= b; }
  friend DifferenceOp operator-(DifferenceOp a);
  friend DifferenceOp operator*(DifferenceOp a, const Rat& s);
  friend DifferenceOp operator*(const DifferenceOp& a, const DifferenceOp& b);
  friend bool operator==(const DifferenceOp& a, const DifferenceOp& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Poly> c_;
};

inline DifferenceOp difference_mul(const DifferenceOp& a, const DifferenceOp& b) { return a * b; }
DifferenceOp normalized(const DifferenceOp& op);
std::string to_string(const DifferenceOp& op);

}  // namespace gevrey
