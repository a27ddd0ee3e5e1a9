#include "gevrey/mellin.hpp"

#include "gevrey/series.hpp"
#include "gevrey/theta.hpp"

namespace gevrey {

namespace {

// c(-T) as an operator.
DiffOp of_minus_theta(const Poly& c) {
  std::vector<Poly> b;
  for (int j = 0; j <= c.degree(); ++j) {
    Rat v = c[static_cast<std::size_t>(j)];
    b.push_back(Poly(j % 2 == 0 ? v : Rat(-v)));
  }
  return to_diffop(make_thetaop(std::move(b)));
}

}  // namespace

DiffOp mellin_operator(const DifferenceOp& xi) {
  DiffOp out;
  const DiffOp shift(Poly(std::vector<Rat>{Rat(-1), Rat(1)}));
  DiffOp shift_pow(Poly(Rat(1)));
  for (int k = 0; k <= xi.order(); ++k) {
    const Poly& c = xi.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) out += of_minus_theta(c) * shift_pow;
    shift_pow = shift_pow * shift;
  }
  return out;
}

DifferenceOp inverse_mellin_operator(const DiffOp& op) {
  LaurentTheta lt = to_laurent_theta(op);
  if (!lt.empty() && lt.begin()->first < 0)
    throw Error("operator is not in Q[z]<T>; multiply on the left by z^" +
                std::to_string(-lt.begin()->first));
  const DifferenceOp up = DifferenceOp::delta() + DifferenceOp(Poly(Rat(1)));
  DifferenceOp out, up_pow(Poly(Rat(1)));
  int k = 0;
  for (const auto& [deg, p] : lt) {
    for (; k < deg; ++k) up_pow = up_pow * up;
    out += up_pow * DifferenceOp(p.scale_var(Rat(-1)));
  }
  return out;
}

PuiseuxLogSeries mellin_series(const FactorialSeries& g) {
  if (g.degenerate()) throw Error("rho is a negative integer: Gamma(n + rho + 1) has poles");
  PuiseuxLogSeries out(Expansion::AtZero, g.rho + Rat(static_cast<long>(g.b.size())), 1, -1);
  SeedCombo inv = inverse_gamma_value(g.rho + 1);
  for (std::size_t n = 0; n < g.b.size(); ++n) {
    if (g.b[n] == 0) continue;
    out.add(g.rho + Rat(static_cast<long>(n)), 0, inv * Rat(g.b[n] / pochhammer(g.rho + 1, n)));
  }
  return out;
}

std::vector<Rat> nicole_convert(const FactorialSeries& g, std::size_t N) {
  if (g.rho != 0) throw Error("nicole_convert needs rho = 0");
  if (N == 0) return {};
  Series B(N);
  for (std::size_t n = 0; n < N && n < g.b.size(); ++n) B[n] = g.b[n] / Rat(factorial(n));
  Series F = poly_compose_truncated(B, one_minus_exp_neg(N - 1), N - 1);
  std::vector<Rat> a(N);
  for (std::size_t n = 0; n < N; ++n) a[n] = (n < F.size() ? F[n] : Rat(0)) * Rat(factorial(n));
  return a;
}

FactorialSeries nicole_reverse(const std::vector<Rat>& a, std::size_t N) {
  FactorialSeries g{0, {}};
  if (N == 0) return g;
  Series F(N);
  for (std::size_t n = 0; n < N && n < a.size(); ++n) F[n] = a[n] / Rat(factorial(n));
  Series B = poly_compose_truncated(F, log_one_over_one_minus(N - 1), N - 1);
  g.b.resize(N);
  for (std::size_t n = 0; n < N; ++n) g.b[n] = (n < B.size() ? B[n] : Rat(0)) * Rat(factorial(n));
  return g;
}

GevreyReport factorial_gevrey_check(const FactorialSeries& g, const Rat& s, const GevreyThresholds& th) {
  return condition_G_report({g.b, "factorial series coefficients"}, s + 1, th);
}

}  // namespace gevrey
