#include "gevrey/weyl.hpp"

#include <algorithm>

#include "gevrey/linalg.hpp"

namespace gevrey {

DiffOp make_diffop(std::vector<Poly> coeffs) { return DiffOp(std::move(coeffs)); }

DiffOp z_op(unsigned k) { return DiffOp(Poly::monomial(1, k)); }

Rat grid(const DiffOp& op, int i, int j) {
  if (i < 0 || i > op.order() || j < 0) return 0;
  return op.coeffs()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int z_degree(const DiffOp& op) {
  int nu = -1;
  for (const auto& c : op.coeffs()) nu = std::max(nu, c.degree());
  return nu;
}

DiffOp normalized(const DiffOp& op) {
  if (op.is_zero()) return op;
  Integer den = 1, num = 0;
  for (const auto& c : op.coeffs()) {
    Integer d = coeff_den_lcm(c);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    Integer g = coeff_num_gcd(c);
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
  }
  Rat s(den, num);
  s.canonicalize();
  if (op.lead().lead() < 0) s = -s;
  if (s == 1) return op;
  return op * s;
}

DiffOp strip_z(const DiffOp& op) {
  int v = -1;
  for (const auto& c : op.coeffs()) {
    if (c.is_zero()) continue;
    int cv = c.valuation();
    v = v < 0 ? cv : std::min(v, cv);
  }
  if (v <= 0) return op;
  std::vector<Poly> out;
  for (const auto& c : op.coeffs()) out.push_back(c.div_xpow(static_cast<unsigned>(v)));
  return DiffOp(std::move(out));
}

RatDiffOp to_ratfun(const DiffOp& op) {
  std::vector<RatFun> v;
  for (const auto& c : op.coeffs()) v.emplace_back(c);
  return RatDiffOp(std::move(v));
}

DiffOp clear_denominators(const RatDiffOp& op) {
  Poly l(1);
  for (const auto& c : op.coeffs())
    if (!c.is_zero()) l = lcm(l, c.den());
  std::vector<Poly> out;
  for (const auto& c : op.coeffs()) out.push_back(c.is_zero() ? Poly() : exact_div(l, c.den()) * c.num());
  return normalized(DiffOp(std::move(out)));
}

DiffOp adjoint(const DiffOp& op) {
  DiffOp out;
  for (int i = 0; i <= op.order(); ++i) {
    DiffOp term = DiffOp::d(static_cast<unsigned>(i)) * DiffOp(op.coeffs()[static_cast<std::size_t>(i)]);
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

namespace {

// D^j z^i expanded as sum_l C(j,l) i(i-1)...(i-l+1) z^{i-l} D^{j-l}.
DiffOp d_pow_times_z_pow(unsigned j, unsigned i) {
  std::vector<Poly> out(j + 1);
  Rat fall = 1;
  for (unsigned l = 0; l <= std::min(i, j); ++l) {
    Rat c = Rat(binomial_int(j, l)) * fall;
    out[j - l] += Poly::monomial(c, i - l);
    fall *= Rat(static_cast<long>(i - l));
  }
  return DiffOp(std::move(out));
}

}  // namespace

DiffOp fourier_laplace(const DiffOp& op, bool symmetrized) {
  // Unsymmetrized: z^j D^i -> (-D)^j z^i. Symmetrized: z^j D^i -> D^j (-z)^i.
  DiffOp out;
  for (int i = 0; i <= op.order(); ++i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= q.degree(); ++j) {
      Rat a = q[static_cast<std::size_t>(j)];
      if (a == 0) continue;
      int sign_pow = symmetrized ? i : j;
      if (sign_pow % 2 != 0) a = -a;
      out += d_pow_times_z_pow(static_cast<unsigned>(j), static_cast<unsigned>(i)) * a;
    }
  }
  return out;
}

DiffOp symmetry(const DiffOp& op) {
  std::vector<Poly> out;
  for (int i = 0; i <= op.order(); ++i) {
    Poly q = op.coeffs()[static_cast<std::size_t>(i)].scale_var(-1);
    out.push_back(i % 2 == 0 ? q : -q);
  }
  return DiffOp(std::move(out));
}

DiffOp twist_exp(const DiffOp& op, const Rat& zeta) {
  std::vector<Poly> out(op.coeffs().size());
  for (int i = 0; i <= op.order(); ++i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    Rat pw = 1;  // (-zeta)^{i-l}
    for (int l = i; l >= 0; --l) {
      Rat c = Rat(binomial_int(static_cast<unsigned long>(i), static_cast<unsigned long>(l))) * pw;
      if (c != 0) out[static_cast<std::size_t>(l)] += q * c;
      pw *= -zeta;
    }
  }
  return DiffOp(std::move(out));
}

DiffOp translate(const DiffOp& op, const Rat& a) {
  std::vector<Poly> out;
  for (const auto& c : op.coeffs()) out.push_back(c.shift(a));
  return DiffOp(std::move(out));
}

Division right_divide(const RatDiffOp& a, const RatDiffOp& b) {
  if (b.is_zero()) throw Error("right division by the zero operator");
  RatDiffOp q, r = a;
  int db = b.order();
  RatFun inv_lead = RatFun(1) / b.lead();
  while (!r.is_zero() && r.order() >= db) {
    int k = r.order() - db;
    std::vector<RatFun> mono(static_cast<std::size_t>(k) + 1);
    mono[static_cast<std::size_t>(k)] = r.lead() * inv_lead;
    RatDiffOp t(std::move(mono));
    q += t;
    r -= t * b;
  }
  return {q, r};
}

namespace {

using Vec = std::vector<RatFun>;

// D * (sum_j c_j D^j) reduced modulo the right ideal generated by op.
Vec d_times_mod(const Vec& v, const RatDiffOp& op) {
  std::size_t a = static_cast<std::size_t>(op.order());
  Vec out(a);
  RatFun carry;
  for (std::size_t j = 0; j < a; ++j) {
    out[j] += v[j].derivative();
    if (j + 1 < a)
      out[j + 1] += v[j];
    else
      carry = v[j];
  }
  if (!carry.is_zero()) {
    RatFun f = carry / op.lead();
    for (std::size_t j = 0; j < a; ++j)
      if (!op.coeffs()[j].is_zero()) out[j] -= f * op.coeffs()[j];
  }
  return out;
}

}  // namespace

DiffOp lclm(const DiffOp& a_in, const DiffOp& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) throw Error("lclm of the zero operator");
  RatDiffOp a = to_ratfun(a_in), b = to_ratfun(b_in);
  auto na = static_cast<std::size_t>(a.order()), nb = static_cast<std::size_t>(b.order());
  // D^k reduced modulo A and modulo B; the first dependency is the lclm.
  Vec ra(na), rb(nb);
  if (na > 0) ra[0] = RatFun(1);
  if (nb > 0) rb[0] = RatFun(1);
  DependencyFinder finder(na + nb);
  for (;;) {
    Vec v(ra);
    v.insert(v.end(), rb.begin(), rb.end());
    if (auto combo = finder.push(std::move(v))) return clear_denominators(RatDiffOp(*combo));
    if (na > 0) ra = d_times_mod(ra, a);
    if (nb > 0) rb = d_times_mod(rb, b);
  }
}

std::string to_string(const DiffOp& op) {
  if (op.is_zero()) return "0";
  std::string s;
  for (int i = op.order(); i >= 0; --i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    if (q.is_zero()) continue;
    std::string dpart = i == 0 ? "" : (i == 1 ? "D" : "D^" + std::to_string(i));
    bool negative = false;
    std::string coeff;
    int nterms = 0;
    for (const auto& c : q.coeffs())
      if (c != 0) ++nterms;
    if (nterms == 1) {
      negative = q.lead() < 0;
      coeff = to_string(negative ? Poly(-q) : q);
    } else {
      coeff = "(" + to_string(q) + ")";
    }
    std::string term;
    if (dpart.empty())
      term = coeff;
    else if (coeff == "1")
      term = dpart;
    else
      term = coeff + "*" + dpart;
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += negative ? " - " + term : " + " + term;
  }
  return s;
}

std::string to_string(const RatDiffOp& op) {
  if (op.is_zero()) return "0";
  std::string s;
  for (int i = op.order(); i >= 0; --i) {
    const RatFun& q = op.coeffs()[static_cast<std::size_t>(i)];
    if (q.is_zero()) continue;
    std::string dpart = i == 0 ? "" : (i == 1 ? "D" : "D^" + std::to_string(i));
    std::string term = "(" + to_string(q) + ")";
    if (!dpart.empty()) term += "*" + dpart;
    s += s.empty() ? term : " + " + term;
  }
  return s;
}

}  // namespace gevrey
