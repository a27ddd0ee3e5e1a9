#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "gevrey/arith.hpp"

namespace gevrey {

namespace {

std::size_t tail_start_for(std::size_t N) {
  if (N >= 40) return std::max<std::size_t>(40, N / 4);
  return std::max<std::size_t>(1, N / 2);
}

// Least-squares slope of y against log n over the finite entries of [from, to].
double slope_vs_log(const std::vector<double>& y, std::size_t from) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (std::size_t n = std::max<std::size_t>(from, 1); n < y.size(); ++n) {
    if (!std::isfinite(y[n])) continue;
    double x = std::log(static_cast<double>(n));
    sx += x;
    sy += y[n];
    sxx += x * x;
    sxy += x * y[n];
    ++k;
  }
  if (k < 2) return 0;
  double den = k * sxx - sx * sx;
  return den == 0 ? 0 : (k * sxy - sx * sy) / den;
}

double tail_max(const std::vector<double>& y, std::size_t from) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t n = from; n < y.size(); ++n)
    if (std::isfinite(y[n])) m = std::max(m, y[n]);
  return m;
}

RateSummary summarize(std::vector<double> rates, const GevreyThresholds& th) {
  RateSummary out;
  std::size_t N = rates.empty() ? 0 : rates.size() - 1;
  out.tail_start = tail_start_for(N);
  out.tail_max = tail_max(rates, out.tail_start);
  out.slope = slope_vs_log(rates, out.tail_start);
  out.bounded = out.slope < th.growth_slope && (!th.max_log_rate || out.tail_max <= *th.max_log_rate);
  out.rates = std::move(rates);
  return out;
}

}  // namespace

RateSummary denominator_rates(const std::vector<Rat>& a, const GevreyThresholds& th) {
  std::vector<double> rates(a.size(), std::numeric_limits<double>::quiet_NaN());
  Integer d = 1;
  for (std::size_t n = 0; n < a.size(); ++n) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a[n].get_den_mpz_t());
    if (n > 0) rates[n] = log_abs(d) / static_cast<double>(n);
  }
  return summarize(std::move(rates), th);
}

std::vector<Rat> gevrey_normalize(const std::vector<Rat>& a, const Rat& s) {
  long p = s.get_num().get_si();
  long q = s.get_den().get_si();
  std::vector<Rat> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rat f(factorial(static_cast<unsigned long>(n) / static_cast<unsigned long>(q)));
    Rat fp = power(f, static_cast<unsigned long>(p < 0 ? -p : p));
    b[n] = p >= 0 ? Rat(a[n] / fp) : Rat(a[n] * fp);
  }
  return b;
}

double estimate_gevrey_order(const std::vector<Rat>& a, std::size_t from) {
  // Normal equations for the regressors n log n, n, log n, 1.
  std::array<std::array<double, 5>, 4> m{};
  int count = 0;
  for (std::size_t n = std::max<std::size_t>(from, 2); n < a.size(); ++n) {
    if (a[n] == 0) continue;
    double x = static_cast<double>(n), lx = std::log(x);
    std::array<double, 4> r{x * lx, x, lx, 1.0};
    double y = log_abs(a[n]);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m[i][j] += r[i] * r[j];
      m[i][4] += r[i] * y;
    }
    ++count;
  }
  if (count < 5) return std::numeric_limits<double>::quiet_NaN();
  // Column scaling keeps the elimination well conditioned.
  std::array<double, 4> sc{};
  for (int i = 0; i < 4; ++i) sc[i] = std::sqrt(m[i][i]);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] /= sc[i] * sc[j];
    m[i][4] /= sc[i];
  }
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    if (m[c][c] == 0) return std::numeric_limits<double>::quiet_NaN();
    for (int r = 0; r < 4; ++r) {
      if (r == c) continue;
      double f = m[r][c] / m[c][c];
      for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return m[0][4] / m[0][0] / sc[0];
}

Rat snap_rational(double x, int max_den) {
  if (!std::isfinite(x)) return 0;
  Rat best = 0;
  double err = std::numeric_limits<double>::infinity();
  for (long q = 1; q <= max_den; ++q) {
    long p = std::lround(x * static_cast<double>(q));
    double e = std::fabs(x - static_cast<double>(p) / static_cast<double>(q));
    if (e < err - 1e-12) {
      err = e;
      best = rat(p, q);
    }
  }
  return best;
}

GevreyReport condition_G_report(const SequenceWindow& w, const Rat& s, const GevreyThresholds& th) {
  if (w.terms.size() < 40) throw Error("window too short: condition (G) report needs at least 40 terms");
  GevreyReport rep;
  rep.s = s;
  rep.window = w.terms.size() - 1;
  std::vector<Rat> b = gevrey_normalize(w.terms, s);
  RateSummary den = denominator_rates(b, th);
  rep.tail_start = den.tail_start;
  rep.denominator_rates = den.rates;
  rep.denominator_tail_max = den.tail_max;
  rep.denominator_slope = den.slope;
  rep.denominators_bounded = den.bounded;
  std::vector<double> mag(b.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t n = 1; n < b.size(); ++n)
    if (b[n] != 0) mag[n] = log_abs(b[n]) / static_cast<double>(n);
  RateSummary ms = summarize(mag, th);
  rep.magnitude_rates = ms.rates;
  rep.magnitude_tail_max = ms.tail_max;
  rep.magnitude_slope = ms.slope;
  rep.magnitudes_bounded = ms.bounded;
  rep.denominator_constant = std::exp(rep.denominator_tail_max);
  rep.magnitude_constant = std::exp(rep.magnitude_tail_max);
  rep.order_estimate = estimate_gevrey_order(w.terms, rep.tail_start);
  rep.order_snapped = snap_rational(rep.order_estimate);
  return rep;
}

PochhammerGrowth pochhammer_growth(const Rat& a, const Rat& b, std::size_t N) {
  if ((is_integer(a) && a <= 0) || (is_integer(b) && b <= 0))
    throw Error("pole in Pochhammer: parameters must not be nonpositive integers");
  PochhammerGrowth out;
  out.values.resize(N + 1);
  Rat v = 1;
  for (std::size_t n = 0; n <= N; ++n) {
    out.values[n] = v;
    Rat k(static_cast<long>(n));
    v *= (a + k) / (b + k);
  }
  out.denominators = denominator_rates(out.values);
  return out;
}

GalochkinReport galochkin_sequence(const DiffOp& op_in, std::size_t N, const GevreyThresholds& th) {
  if (op_in.order() < 1) throw Error("galochkin_sequence needs positive order");
  DiffOp op = normalized(op_in);
  auto mu = static_cast<std::size_t>(op.order());
  const Poly& Q = op.lead();
  Poly dQ = Q.derivative();
  // D^k mod op = N_k / Q^{k-mu+1}; start at k = mu - 1 with the unit vector.
  std::vector<Poly> cur(mu);
  cur[mu - 1] = Poly(1);
  GalochkinReport rep;
  rep.denominators.assign(N + 1, Integer(1));
  std::vector<double> rates(N + 1, std::numeric_limits<double>::quiet_NaN());
  Integer d = 1;
  Integer mfact = 1;
  for (std::size_t m = 1; m <= N; ++m) {
    Rat e(static_cast<long>(m - 1));
    std::vector<Poly> next(mu);
    Poly carry = cur[mu - 1];
    for (std::size_t j = 0; j < mu; ++j) {
      Poly v = cur[j].derivative() * Q - dQ * cur[j] * e;
      if (j > 0) v += cur[j - 1] * Q;
      if (!carry.is_zero()) v -= carry * op.coeffs()[j];
      next[j] = std::move(v);
    }
    cur = std::move(next);
    mfact *= static_cast<unsigned long>(m);
    Rat inv_fact(Integer(1), mfact);
    // Q_{m,j} = -N_{m+mu-1,j} / m!
    for (const auto& p : cur) {
      for (const auto& c : p.coeffs()) {
        Rat q = c * inv_fact;
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
      }
    }
    rep.denominators[m] = d;
    rates[m] = log_abs(d) / static_cast<double>(m);
    if (m == N) {
      rep.last_coefficients.clear();
      for (const auto& p : cur) rep.last_coefficients.push_back(p * Rat(-inv_fact));
    }
  }
  rep.rates = summarize(std::move(rates), th);
  return rep;
}

std::vector<Poly> galochkin_by_division(const DiffOp& op_in, unsigned m) {
  DiffOp op = normalized(op_in);
  if (op.order() < 1) throw Error("galochkin needs positive order");
  unsigned mu = static_cast<unsigned>(op.order());
  Poly qm = pow(op.lead(), m) * Rat(Integer(1), factorial(m));
  DiffOp lhs = DiffOp(qm) * DiffOp::d(m + mu - 1);
  Division div = right_divide(lhs, op);
  std::vector<Poly> out;
  for (unsigned j = 0; j < mu; ++j) {
    RatFun c = div.remainder.coeff(static_cast<int>(j));
    if (!c.is_polynomial())
      throw Error("internal inconsistency: non-polynomial Galochkin coefficient");
    out.push_back(-c.num());
  }
  return out;
}

}  // namespace gevrey
