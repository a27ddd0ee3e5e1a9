#pragma once

#include <string>

#include "gevrey/poly.hpp"

namespace gevrey {

// num/den with den monic and gcd(num, den) = 1.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(Poly num);  // NOLINT
  RatFun(Poly num, Poly den);
  RatFun(const Rat& c) : RatFun(Poly(c)) {}  // NOLINT
  RatFun(long c) : RatFun(Poly(c)) {}        // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  RatFun derivative() const;
  Rat eval(const Rat& x) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Poly num_, den_;
};

std::string to_string(const RatFun& f, std::string_view var = "z");

}  // namespace gevrey
