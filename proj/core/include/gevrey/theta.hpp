#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gevrey/weyl.hpp"

namespace gevrey {

// sum_j b_j(z) T^j with T = z D and coefficients on the left.
struct ThetaOp {
  std::vector<Poly> b;

  int order() const { return static_cast<int>(b.size()) - 1; }
  friend bool operator==(const ThetaOp&, const ThetaOp&) = default;
};

ThetaOp make_thetaop(std::vector<Poly> b);

// sum_k z^k p_k(T) over k in Z; p_k is a polynomial in T.
using LaurentTheta = std::map<int, Poly>;

LaurentTheta to_laurent_theta(const DiffOp& op);
// Left-multiplies by the least z^d (d >= 0) making the result polynomial.
DiffOp from_laurent_theta(const LaurentTheta& lt);

struct ThetaForm {
  ThetaOp op;
  int m = 0;  // z^m * input = op
};
ThetaForm theta_form(const DiffOp& op);
DiffOp to_diffop(const ThetaOp& t);
// Content-free, positive leading coefficient of b_top.
ThetaOp normalized(const ThetaOp& t);

DiffOp ramify(const DiffOp& op, unsigned u);
DiffOp descend(const DiffOp& op, unsigned u);
DiffOp invert(const DiffOp& op);

std::string to_string(const ThetaOp& t);

}  // namespace gevrey
