#pragma once

#include <map>
#include <string>
#include <vector>

#include "gevrey/seeds.hpp"
#include "gevrey/series.hpp"
#include "gevrey/weyl.hpp"

namespace gevrey {

enum class Expansion { AtZero, AtInfinity };

// Finite sum of c * w^e * log^k w over the local variable w, where
// w = orientation * (z - center) at a finite point and w = z itself
// (with negative exponents) at infinity. Terms of depth below
// precision() are exact; depth is e at a finite point and -e at infinity.
class PuiseuxLogSeries {
 public:
  struct Key {
    Rat exponent;
    int log_power = 0;
    friend bool operator<(const Key& a, const Key& b) {
      if (a.exponent != b.exponent) return a.exponent < b.exponent;
      return a.log_power < b.log_power;
    }
    friend bool operator==(const Key& a, const Key& b) {
      return a.exponent == b.exponent && a.log_power == b.log_power;
    }
  };

  explicit PuiseuxLogSeries(Expansion e = Expansion::AtZero, Rat precision = 0, Rat center = 0,
                            int orientation = 1);

  static PuiseuxLogSeries from_series(const Series& s, Expansion e, const Rat& offset = 0);

  Expansion expansion() const { return expansion_; }
  const Rat& precision() const { return precision_; }
  const Rat& center() const { return center_; }
  int orientation() const { return orientation_; }
  Rat depth(const Rat& exponent) const;

  // Terms at or beyond the precision are dropped.
  void add(const Rat& exponent, int log_power, const SeedCombo& c);
  const std::map<Key, SeedCombo>& terms() const { return terms_; }
  SeedCombo coeff(const Rat& exponent, int log_power = 0) const;
  bool is_zero() const { return terms_.empty(); }
  int max_log_power() const;
  // Representatives in [0, 1) of the exponents present.
  std::vector<Rat> exponent_classes() const;

  PuiseuxLogSeries with_precision(const Rat& p) const;
  PuiseuxLogSeries& operator+=(const PuiseuxLogSeries& o);
  PuiseuxLogSeries& operator-=(const PuiseuxLogSeries& o);
  PuiseuxLogSeries& operator*=(const Rat& s);
  friend PuiseuxLogSeries operator+(PuiseuxLogSeries a, const PuiseuxLogSeries& b) { return a += b; }
  friend PuiseuxLogSeries operator-(PuiseuxLogSeries a, const PuiseuxLogSeries& b) { return a -= b; }
  friend PuiseuxLogSeries operator*(PuiseuxLogSeries a, const Rat& s) { return a *= s; }
  friend bool operator==(const PuiseuxLogSeries& a, const PuiseuxLogSeries& b);

 private:
  void check_compatible(const PuiseuxLogSeries& o) const;
  Expansion expansion_;
  Rat precision_;
  Rat center_;
  int orientation_;
  std::map<Key, SeedCombo> terms_;
};

// Operator in the local variable w of a finite expansion point.
DiffOp local_operator(const DiffOp& op, const Rat& center, int orientation);

// Exact termwise action of op on s, with pessimistic output precision.
PuiseuxLogSeries apply(const DiffOp& op, const PuiseuxLogSeries& s);

std::string to_string(const PuiseuxLogSeries& s);

}  // namespace gevrey
