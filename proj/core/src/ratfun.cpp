#include "gevrey/ratfun.hpp"

namespace gevrey {

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(1) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rat l = den_.lead();
  if (l != 1) {
    num_ *= Rat(1 / l);
    den_ *= Rat(1 / l);
  }
}

RatFun RatFun::derivative() const {
  if (is_polynomial()) return RatFun(num_.derivative());
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFun::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw Error("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error("rational function division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFun& f, std::string_view var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace gevrey
