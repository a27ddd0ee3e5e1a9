#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gevrey/poly.hpp"
#include "gevrey/ratfun.hpp"

namespace gevrey {

inline Poly scale(const Poly& p, const Rat& s) { return p * s; }
inline RatFun scale(const RatFun& f, const Rat& s) { return f * RatFun(s); }

// sum_i c_i(z) D^i with coefficients on the left and D z = z D + 1.
template <class C>
class OreOp {
 public:
  OreOp() = default;
  explicit OreOp(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  OreOp(const C& c) : c_{c} { trim(); }  // NOLINT

  static OreOp d(unsigned k = 1) {
    std::vector<C> v(k + 1);
    v[k] = C(Rat(1));
    return OreOp(std::move(v));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(int i) const { return i >= 0 && i <= order() ? c_[static_cast<std::size_t>(i)] : C(); }
  const C& lead() const { return c_.back(); }

  OreOp& operator+=(const OreOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  OreOp& operator-=(const OreOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend OreOp operator+(OreOp a, const OreOp& b) { return a += b; }
  friend OreOp operator-(OreOp a, const OreOp& b) { return a -= b; }
  friend OreOp operator-(OreOp a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend OreOp operator*(OreOp a, const Rat& s) {
    for (auto& c : a.c_) c = scale(c, s);
    a.trim();
    return a;
  }
  friend bool operator==(const OreOp& a, const OreOp& b) { return a.c_ == b.c_; }

  // Left multiplication by a coefficient.
  OreOp left_mul(const C& f) const {
    OreOp out = *this;
    for (auto& c : out.c_) c = f * c;
    out.trim();
    return out;
  }

  friend OreOp operator*(const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1);
    // derivs[l][k] = l-th derivative of b_k
    std::vector<std::vector<C>> derivs{b.c_};
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == C()) continue;
      while (derivs.size() <= i) {
        std::vector<C> next;
        next.reserve(b.c_.size());
        for (const auto& c : derivs.back()) next.push_back(c.derivative());
        derivs.push_back(std::move(next));
      }
      for (std::size_t l = 0; l <= i; ++l) {
        Rat bin(binomial_int(i, l));
        for (std::size_t k = 0; k < b.c_.size(); ++k) {
          const C& bk = derivs[l][k];
          if (bk == C()) continue;
          out[i - l + k] += scale(a.c_[i] * bk, bin);
        }
      }
    }
    return OreOp(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == C()) c_.pop_back();
  }
  std::vector<C> c_;
};

using DiffOp = OreOp<Poly>;
using RatDiffOp = OreOp<RatFun>;

DiffOp make_diffop(std::vector<Poly> coeffs);
DiffOp z_op(unsigned k = 1);
// Coefficient a_{i,j} of z^j D^i.
Rat grid(const DiffOp& op, int i, int j);
// Largest z-degree over all coefficients.
int z_degree(const DiffOp& op);

// Content-free with positive coefficient at the lexicographically largest (i, j).
DiffOp normalized(const DiffOp& op);
// Removes the common left power of z.
DiffOp strip_z(const DiffOp& op);
RatDiffOp to_ratfun(const DiffOp& op);
// Multiplies by the lcm of denominators and normalizes.
DiffOp clear_denominators(const RatDiffOp& op);

DiffOp adjoint(const DiffOp& op);
DiffOp fourier_laplace(const DiffOp& op, bool symmetrized);
// z -> -z, D -> -D
DiffOp symmetry(const DiffOp& op);
// D -> D - zeta
DiffOp twist_exp(const DiffOp& op, const Rat& zeta);
// z -> z + a
DiffOp translate(const DiffOp& op, const Rat& a);

struct Division {
  RatDiffOp quotient, remainder;
};
Division right_divide(const RatDiffOp& a, const RatDiffOp& b);
inline Division right_divide(const DiffOp& a, const DiffOp& b) {
  return right_divide(to_ratfun(a), to_ratfun(b));
}
DiffOp lclm(const DiffOp& a, const DiffOp& b);

std::string to_string(const DiffOp& op);
std::string to_string(const RatDiffOp& op);

}  // namespace gevrey
