#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gevrey/rat.hpp"

namespace gevrey {

// Dense univariate polynomial over Q; coefficient index = degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(const Rat& c);  // NOLINT: constants promote implicitly
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT

  static Poly monomial(const Rat& c, unsigned degree);
  static Poly variable() { return monomial(1, 1); }
  // (x - r1)(x - r2)...
  static Poly from_roots(const std::vector<Rat>& roots);
  // x(x-1)...(x-k+1)
  static Poly falling(unsigned k);
  // (x+1)(x+2)...(x+k)
  static Poly rising_from_one(unsigned k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const Rat& lead() const;
  // Lowest power with nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly compose(const Poly& inner) const;
  Poly shift(const Rat& a) const;      // p(x + a)
  Poly scale_var(const Rat& a) const;  // p(a x)
  Poly monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  Poly primitive() const;
  Poly mul_xpow(unsigned k) const;
  // Drops the coefficients below x^k and divides by x^k.
  Poly div_xpow(unsigned k) const;
  Poly truncated(std::size_t terms) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned e);

// Lowest common denominator and gcd of numerators over all coefficients.
Integer coeff_den_lcm(const Poly& p);
Integer coeff_num_gcd(const Poly& p);

struct RootMultiplicity {
  Rat root;
  int multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
  std::vector<RootMultiplicity> roots;  // ascending
  Poly remainder;                       // monic, free of rational roots
};

RationalRoots rational_roots(const Poly& p);

// Yun's algorithm: p = c * prod f_i^i with f_i squarefree, coprime, monic.
std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& p);

// "3*z^2 - z + 1/2"; the zero polynomial prints as "0".
std::string to_string(const Poly& p, std::string_view var = "z");

}  // namespace gevrey
