#include "gevrey/laplace.hpp"
#include "gevrey/theta.hpp"

namespace gevrey {

DiffOp build_E_operator(const DiffOp& op) {
  if (op.is_zero()) throw Error("build_E_operator of the zero operator");
  // F^+ = (1/z) f(1/z) is killed by invert(op) * z.
  DiffOp psi = normalized(strip_z(invert(op) * z_op()));
  return normalized(strip_z(fourier_laplace(psi, true)));
}

DiffOp recalibrate(const DiffOp& op, const Rat& s) {
  if (s == 0) throw Error("recalibration order must be nonzero");
  unsigned long p = abs_of(Rat(s.get_num())).get_num().get_ui();
  unsigned long q = s.get_den().get_ui();
  // y(z^{-s}) is y(z^{|p|}) sectioned by z -> z^{1/q}, after z -> 1/z when s > 0.
  DiffOp cur = s > 0 ? invert(op) : op;
  cur = ramify(cur, static_cast<unsigned>(p));
  try {
    cur = descend(cur, static_cast<unsigned>(q));
  } catch (const Error& e) {
    throw Error(std::string(e.what()) +
                "; the general case needs an lclm over the conjugates y(eps z^{-s}), not implemented");
  }
  return normalized(strip_z(cur));
}

}  // namespace gevrey
