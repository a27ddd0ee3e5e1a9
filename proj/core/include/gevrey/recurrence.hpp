#pragma once

#include <map>
#include <string>
#include <vector>

#include "gevrey/poly.hpp"

namespace gevrey {

// sum_i P_i(n) a(n+i) = 0 with shifts 0..r, P_0 and P_r nonzero,
// integer coefficients with gcd 1 and positive leading coefficient of P_r.
class Recurrence {
 public:
  Recurrence() = default;
  // Accepts arbitrary integer shifts; reindexes so the least shift is 0.
  static Recurrence from_shifts(const std::map<int, Poly>& by_shift);
  explicit Recurrence(const std::vector<Poly>& coeffs);

  int order() const { return static_cast<int>(p_.size()) - 1; }
  bool is_zero() const { return p_.empty(); }
  // Order-0 relations carry no recursion and are flagged by callers.
  bool degenerate() const { return p_.size() == 1; }
  const std::vector<Poly>& coeffs() const { return p_; }
  const Poly& coeff(int i) const { return p_[static_cast<std::size_t>(i)]; }
  friend bool operator==(const Recurrence&, const Recurrence&) = default;

 private:
  std::vector<Poly> p_;
};

std::string to_string(const Recurrence& r);

}  // namespace gevrey
