#include <algorithm>

#include "gevrey/arith.hpp"
#include "gevrey/linalg.hpp"
#include "gevrey/theta.hpp"

namespace gevrey {

Recurrence::Recurrence(const std::vector<Poly>& coeffs) {
  std::map<int, Poly> m;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) m[static_cast<int>(i)] = coeffs[i];
  *this = from_shifts(m);
}

Recurrence Recurrence::from_shifts(const std::map<int, Poly>& by_shift) {
  Recurrence r;
  std::map<int, Poly> nz;
  for (const auto& [k, p] : by_shift)
    if (!p.is_zero()) nz.emplace(k, p);
  if (nz.empty()) return r;
  int kmin = nz.begin()->first, kmax = nz.rbegin()->first;
  r.p_.resize(static_cast<std::size_t>(kmax - kmin + 1));
  // sum P_k(n) a(n+k) at n = m - kmin becomes sum P_k(m - kmin) a(m + k - kmin).
  for (const auto& [k, p] : nz) r.p_[static_cast<std::size_t>(k - kmin)] = p.shift(Rat(-kmin));
  Integer den = 1, num = 0;
  for (const auto& p : r.p_) {
    Integer d = coeff_den_lcm(p);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    Integer g = coeff_num_gcd(p);
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
  }
  Rat s(den, num);
  s.canonicalize();
  if (r.p_.back().lead() < 0) s = -s;
  for (auto& p : r.p_) p *= s;
  return r;
}

std::string to_string(const Recurrence& r) {
  if (r.is_zero()) return "0 = 0";
  std::string s;
  for (int i = r.order(); i >= 0; --i) {
    const Poly& q = r.coeff(i);
    if (q.is_zero()) continue;
    std::string a = i == 0 ? "a(n)" : "a(n+" + std::to_string(i) + ")";
    int nterms = 0;
    for (const auto& c : q.coeffs())
      if (c != 0) ++nterms;
    bool negative = false;
    std::string coeff;
    if (nterms == 1) {
      negative = q.lead() < 0;
      coeff = to_string(negative ? Poly(-q) : q, "n");
    } else {
      coeff = "(" + to_string(q, "n") + ")";
    }
    std::string term = coeff == "1" ? a : coeff + "*" + a;
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += negative ? " - " + term : " + " + term;
  }
  return s + " = 0";
}

Recurrence operator_to_recurrence(const DiffOp& op) {
  if (op.is_zero()) throw Error("operator_to_recurrence of the zero operator");
  std::optional<int> dmin;
  for (int i = 0; i <= op.order(); ++i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= q.degree(); ++j)
      if (q[static_cast<std::size_t>(j)] != 0) dmin = dmin ? std::min(*dmin, i - j) : i - j;
  }
  // z^j D^i sends a_m z^m to m(m-1)...(m-i+1) a_m z^{m-i+j}.
  std::map<int, Poly> by_shift;
  for (int i = 0; i <= op.order(); ++i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    Poly fall = Poly::falling(static_cast<unsigned>(i));
    for (int j = 0; j <= q.degree(); ++j) {
      Rat c = q[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      int k = i - j - *dmin;
      by_shift[k] += fall.shift(Rat(k)) * c;
    }
  }
  return Recurrence::from_shifts(by_shift);
}

namespace {

DiffOp natural_operator(const Recurrence& r) {
  LaurentTheta lt;
  int order = r.order();
  for (int k = 0; k <= order; ++k) {
    if (r.coeff(k).is_zero()) continue;
    lt[order - k] = r.coeff(k).shift(Rat(-k));
  }
  return from_laurent_theta(lt);
}

}  // namespace

DiffOp recurrence_to_operator(const Recurrence& r) {
  if (r.is_zero()) throw Error("recurrence_to_operator of the zero recurrence");
  return normalized(strip_z(natural_operator(r)));
}

std::vector<Rat> boundary_terms(const Recurrence& r, const std::vector<Rat>& terms) {
  int order = r.order();
  std::vector<Rat> b(static_cast<std::size_t>(std::max(order, 0)));
  for (int e = 0; e < order; ++e) {
    Rat acc = 0;
    for (int i = order - e; i <= order; ++i) {
      int m = e - order + i;
      if (m < 0 || static_cast<std::size_t>(m) >= terms.size())
        throw Error("boundary needs the first " + std::to_string(order) + " terms");
      acc += r.coeff(i).eval(Rat(e - order)) * terms[static_cast<std::size_t>(m)];
    }
    b[static_cast<std::size_t>(e)] = acc;
  }
  return b;
}

DiffOp recurrence_to_operator(const Recurrence& r, const std::vector<Rat>& inits) {
  if (r.is_zero()) throw Error("recurrence_to_operator of the zero recurrence");
  DiffOp op = natural_operator(r);
  auto need = static_cast<std::size_t>(std::max(r.order(), 0));
  std::vector<Rat> terms =
      generate(r, inits, std::max(need, inits.size())).terms;
  std::vector<Rat> b = boundary_terms(r, terms);
  DiffOp theta = z_op() * DiffOp::d();
  for (std::size_t e = 0; e < b.size(); ++e)
    if (b[e] != 0) op = (theta - DiffOp(Poly(Rat(static_cast<long>(e))))) * op;
  return normalized(strip_z(op));
}

SequenceWindow generate(const Recurrence& r, const std::vector<Rat>& inits, std::size_t N) {
  if (r.is_zero()) throw Error("generate from the zero recurrence");
  auto order = static_cast<std::size_t>(r.order());
  std::vector<Rat> a(N + 1);
  if (inits.size() < std::min(order, N + 1))
    throw Error("generate needs at least " + std::to_string(order) + " initial values");
  for (std::size_t i = 0; i < inits.size() && i <= N; ++i) a[i] = inits[i];
  for (std::size_t n = 0; n + order <= N; ++n) {
    std::size_t t = n + order;
    Rat rn(static_cast<long>(n));
    Rat acc = 0;
    for (std::size_t i = 0; i < order; ++i) {
      const Poly& p = r.coeff(static_cast<int>(i));
      if (!p.is_zero() && a[n + i] != 0) acc += p.eval(rn) * a[n + i];
    }
    Rat lead = r.coeff(static_cast<int>(order)).eval(rn);
    bool given = t < inits.size();
    if (lead != 0) {
      Rat val = -acc / lead;
      if (given && a[t] != val)
        throw Error("initial value at index " + std::to_string(t) + " contradicts the recurrence");
      a[t] = val;
    } else if (!given) {
      throw Error("leading coefficient vanishes at index " + std::to_string(t) +
                  "; an initial value is required there");
    } else if (acc != 0) {
      throw Error("recurrence fails at n = " + std::to_string(n) + " for the given initial values");
    }
  }
  return {std::move(a), "generated from " + to_string(r)};
}

Recurrence order_shift(const Recurrence& r, int p) {
  if (p == 0 || r.is_zero()) return r;
  int order = r.order();
  std::vector<Poly> out;
  auto ap = static_cast<unsigned>(p > 0 ? p : -p);
  for (int i = 0; i <= order; ++i) {
    Poly f(1);
    if (p > 0) {
      for (int t = 1; t <= i; ++t) f *= Poly({Rat(t), Rat(1)});
    } else {
      for (int t = i + 1; t <= order; ++t) f *= Poly({Rat(t), Rat(1)});
    }
    out.push_back(r.coeff(i) * pow(f, ap));
  }
  return Recurrence(out);
}

namespace {

RatFun shift_one(const RatFun& f) { return RatFun(f.num().shift(1), f.den().shift(1)); }

}  // namespace

SectionResult section(const Recurrence& r, unsigned u, unsigned v, const std::vector<Rat>& inits,
                      std::size_t check_terms) {
  if (u == 0 || v >= u) throw Error("section needs 0 <= v < u");
  if (r.is_zero()) throw Error("section of the zero recurrence");
  auto order = static_cast<std::size_t>(r.order());
  SectionResult res;
  if (order == 0) {
    res.recurrence = r;
  } else {
    // V_t expresses a(m+t) over a(m), ..., a(m+order-1) with coefficients in Q(m).
    std::vector<RatFun> lead_ratio(order);
    const Poly& pr = r.coeff(static_cast<int>(order));
    for (std::size_t j = 0; j < order; ++j) lead_ratio[j] = RatFun(-r.coeff(static_cast<int>(j)), pr);
    std::vector<RatFun> cur(order);
    cur[0] = RatFun(1);
    DependencyFinder finder(order);
    std::optional<std::vector<RatFun>> combo;
    std::size_t t = 0;
    std::size_t limit = order + 1;
    for (std::size_t s = 0; s <= limit && !combo; ++s) {
      while (t < u * s) {
        std::vector<RatFun> next(order);
        RatFun top = shift_one(cur[order - 1]);
        for (std::size_t j = 0; j < order; ++j) {
          if (j > 0 && !cur[j - 1].is_zero()) next[j] += shift_one(cur[j - 1]);
          if (!top.is_zero() && !lead_ratio[j].is_zero()) next[j] += top * lead_ratio[j];
        }
        cur = std::move(next);
        ++t;
      }
      combo = finder.push(cur);
    }
    if (!combo) throw Error("section elimination did not terminate within order " + std::to_string(limit));
    Poly l(1);
    for (const auto& c : *combo)
      if (!c.is_zero()) l = lcm(l, c.den());
    std::map<int, Poly> by_shift;
    Poly sub({Rat(static_cast<long>(v)), Rat(static_cast<long>(u))});
    for (std::size_t s = 0; s < combo->size(); ++s) {
      const RatFun& c = (*combo)[s];
      if (c.is_zero()) continue;
      Poly pm = exact_div(l, c.den()) * c.num();
      by_shift[static_cast<int>(s)] = pm.compose(sub);
    }
    res.recurrence = Recurrence::from_shifts(by_shift);
  }
  if (!inits.empty()) {
    std::size_t R = static_cast<std::size_t>(std::max(res.recurrence.order(), 0));
    std::size_t need = u * (check_terms + R) + v;
    std::vector<Rat> a = generate(r, inits, need).terms;
    bool ok = true;
    for (std::size_t n = 0; n < check_terms && ok; ++n) {
      Rat acc = 0;
      for (std::size_t s = 0; s <= R; ++s)
        acc += res.recurrence.coeff(static_cast<int>(s)).eval(Rat(static_cast<long>(n))) *
               a[u * (n + s) + v];
      ok = acc == 0;
    }
    res.validated = ok;
  }
  return res;
}

SequenceWindow hadamard(const SequenceWindow& a, const SequenceWindow& b) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  SequenceWindow out{std::vector<Rat>(n), "hadamard(" + a.provenance + ", " + b.provenance + ")"};
  for (std::size_t i = 0; i < n; ++i) out.terms[i] = a.terms[i] * b.terms[i];
  return out;
}

SequenceWindow cauchy(const SequenceWindow& a, const SequenceWindow& b) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  SequenceWindow out{std::vector<Rat>(n), "cauchy(" + a.provenance + ", " + b.provenance + ")"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) out.terms[i] += a.terms[j] * b.terms[i - j];
  return out;
}

}  // namespace gevrey
