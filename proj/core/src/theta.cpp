#include "gevrey/theta.hpp"

#include <algorithm>

namespace gevrey {

namespace {

// Stirling numbers of the second kind: T^j = sum_l S(j,l) z^l D^l.
std::vector<std::vector<Integer>> stirling2(std::size_t upto) {
  std::vector<std::vector<Integer>> table{{1}};
  while (table.size() <= upto) {
    std::size_t j = table.size();
    std::vector<Integer> row(j + 1);
    for (std::size_t l = 1; l <= j; ++l) {
      Integer prev = l < table[j - 1].size() ? table[j - 1][l] : Integer(0);
      row[l] = Integer(l) * prev + table[j - 1][l - 1];
    }
    table.push_back(std::move(row));
  }
  return table;
}

void add_to(LaurentTheta& lt, int k, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = lt.emplace(k, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) lt.erase(it);
  }
}

}  // namespace

ThetaOp make_thetaop(std::vector<Poly> b) {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
  return {std::move(b)};
}

LaurentTheta to_laurent_theta(const DiffOp& op) {
  LaurentTheta lt;
  for (int i = 0; i <= op.order(); ++i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    Poly fall = Poly::falling(static_cast<unsigned>(i));
    for (int t = 0; t <= q.degree(); ++t) {
      Rat c = q[static_cast<std::size_t>(t)];
      if (c != 0) add_to(lt, t - i, fall * c);
    }
  }
  return lt;
}

DiffOp from_laurent_theta(const LaurentTheta& lt) {
  // z^k T^j = sum_l S(j,l) z^{k+l} D^l
  std::map<std::pair<int, int>, Rat> terms;  // (l, exponent) -> coeff
  int emin = 0;
  bool any = false;
  int top = 0;
  for (const auto& [k, p] : lt) top = std::max(top, p.degree());
  const auto s2 = stirling2(static_cast<std::size_t>(top));
  for (const auto& [k, p] : lt) {
    for (int j = 0; j <= p.degree(); ++j) {
      Rat c = p[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      for (int l = 0; l <= j; ++l) {
        const Integer& s = s2[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
        if (s == 0) continue;
        terms[{l, k + l}] += c * Rat(s);
      }
    }
  }
  for (const auto& [key, c] : terms) {
    if (c == 0) continue;
    emin = any ? std::min(emin, key.second) : key.second;
    any = true;
  }
  if (!any) return {};
  int shift = emin < 0 ? -emin : 0;
  std::vector<Poly> out;
  for (const auto& [key, c] : terms) {
    if (c == 0) continue;
    auto l = static_cast<std::size_t>(key.first);
    if (out.size() <= l) out.resize(l + 1);
    out[l] += Poly::monomial(c, static_cast<unsigned>(key.second + shift));
  }
  return DiffOp(std::move(out));
}

ThetaForm theta_form(const DiffOp& op) {
  LaurentTheta lt = to_laurent_theta(op);
  if (lt.empty()) return {};
  int kmin = lt.begin()->first;
  int m = kmin < 0 ? -kmin : 0;
  std::vector<Poly> b;
  for (const auto& [k, p] : lt) {
    for (int j = 0; j <= p.degree(); ++j) {
      Rat c = p[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      if (b.size() <= static_cast<std::size_t>(j)) b.resize(static_cast<std::size_t>(j) + 1);
      b[static_cast<std::size_t>(j)] += Poly::monomial(c, static_cast<unsigned>(k + m));
    }
  }
  return {make_thetaop(std::move(b)), m};
}

DiffOp to_diffop(const ThetaOp& t) {
  LaurentTheta lt;
  for (int j = 0; j <= t.order(); ++j) {
    const Poly& bj = t.b[static_cast<std::size_t>(j)];
    for (int k = 0; k <= bj.degree(); ++k) {
      Rat c = bj[static_cast<std::size_t>(k)];
      if (c != 0) add_to(lt, k, Poly::monomial(c, static_cast<unsigned>(j)));
    }
  }
  return from_laurent_theta(lt);
}

ThetaOp normalized(const ThetaOp& t) {
  if (t.b.empty()) return t;
  Integer den = 1, num = 0;
  for (const auto& c : t.b) {
    Integer d = coeff_den_lcm(c);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    Integer g = coeff_num_gcd(c);
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
  }
  Rat s(den, num);
  s.canonicalize();
  if (t.b.back().lead() < 0) s = -s;
  ThetaOp out = t;
  for (auto& c : out.b) c *= s;
  return out;
}

DiffOp ramify(const DiffOp& op, unsigned u) {
  if (u == 0) throw Error("ramification index must be positive");
  if (u == 1) return normalized(op);
  LaurentTheta out;
  Rat inv(1, static_cast<long>(u));
  for (const auto& [k, p] : to_laurent_theta(op)) add_to(out, k * static_cast<int>(u), p.scale_var(inv));
  return normalized(from_laurent_theta(out));
}

DiffOp descend(const DiffOp& op, unsigned u) {
  if (u == 0) throw Error("descent index must be positive");
  LaurentTheta lt = to_laurent_theta(op);
  if (lt.empty()) return op;
  int kmin = lt.begin()->first;
  LaurentTheta out;
  for (const auto& [k, p] : lt) {
    int rel = k - kmin;
    if (rel % static_cast<int>(u) != 0) throw Error("descent requires mu_u-invariant operator");
    add_to(out, rel / static_cast<int>(u), p.scale_var(Rat(static_cast<long>(u))));
  }
  return normalized(from_laurent_theta(out));
}

DiffOp invert(const DiffOp& op) {
  LaurentTheta out;
  for (const auto& [k, p] : to_laurent_theta(op)) add_to(out, -k, p.scale_var(-1));
  return normalized(from_laurent_theta(out));
}

std::string to_string(const ThetaOp& t) {
  if (t.b.empty()) return "0";
  std::string s;
  for (int j = t.order(); j >= 0; --j) {
    const Poly& q = t.b[static_cast<std::size_t>(j)];
    if (q.is_zero()) continue;
    std::string tpart = j == 0 ? "" : (j == 1 ? "T" : "T^" + std::to_string(j));
    int nterms = 0;
    for (const auto& c : q.coeffs())
      if (c != 0) ++nterms;
    bool negative = false;
    std::string coeff;
    if (nterms == 1) {
      negative = q.lead() < 0;
      coeff = to_string(negative ? Poly(-q) : q);
    } else {
      coeff = "(" + to_string(q) + ")";
    }
    std::string term = tpart.empty() ? coeff : (coeff == "1" ? tpart : coeff + "*" + tpart);
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += negative ? " - " + term : " + " + term;
  }
  return s;
}

}  // namespace gevrey
