#include "gevrey/difference.hpp"

namespace gevrey {

DifferenceOp::DifferenceOp(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

void DifferenceOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DifferenceOp DifferenceOp::delta(unsigned k) {
  std::vector<Poly> v(k + 1);
  v[k] = Poly(1);
  return DifferenceOp(std::move(v));
}

DifferenceOp& DifferenceOp::operator+=(const DifferenceOp& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DifferenceOp& DifferenceOp::operator-=(const DifferenceOp& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DifferenceOp operator-(DifferenceOp a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

DifferenceOp operator*(DifferenceOp a, const Rat& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

DifferenceOp operator*(const DifferenceOp& a, const DifferenceOp& b) {
  // Delta p(x) = p(x+1) Delta + (p(x+1) - p(x)); move every Delta^i of a
  // across the coefficients of b one step at a time.
  DifferenceOp out;
  for (std::size_t k = 0; k < b.c_.size(); ++k) {
    if (b.c_[k].is_zero()) continue;
    // cur = Delta^i * b_k(x) Delta^k, starting at i = 0.
    std::vector<Poly> cur(k + 1);
    cur[k] = b.c_[k];
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i].is_zero()) {
        std::vector<Poly> term(cur.size());
        for (std::size_t t = 0; t < cur.size(); ++t) term[t] = a.c_[i] * cur[t];
        out += DifferenceOp(std::move(term));
      }
      if (i + 1 == a.c_.size()) break;
      std::vector<Poly> next(cur.size() + 1);
      for (std::size_t t = 0; t < cur.size(); ++t) {
        if (cur[t].is_zero()) continue;
        Poly shifted = cur[t].shift(1);
        next[t + 1] += shifted;
        next[t] += shifted - cur[t];
      }
      cur = std::move(next);
    }
  }
  return out;
}

DifferenceOp normalized(const DifferenceOp& op) {
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
  if (op.coeffs().back().lead() < 0) s = -s;
  return op * s;
}

std::string to_string(const DifferenceOp& op) {
  if (op.is_zero()) return "0";
  std::string s;
  for (int i = op.order(); i >= 0; --i) {
    const Poly& q = op.coeffs()[static_cast<std::size_t>(i)];
    if (q.is_zero()) continue;
    std::string dpart = i == 0 ? "" : (i == 1 ? "Delta" : "Delta^" + std::to_string(i));
    int nterms = 0;
    for (const auto& c : q.coeffs())
      if (c != 0) ++nterms;
    bool negative = false;
    std::string coeff;
    if (nterms == 1) {
      negative = q.lead() < 0;
      coeff = to_string(negative ? Poly(-q) : q, "x");
    } else {
      coeff = "(" + to_string(q, "x") + ")";
    }
    std::string term = dpart.empty() ? coeff : (coeff == "1" ? dpart : coeff + "*" + dpart);
    if (s.empty())
      s = negative ? "-" + term : term;
    else
      s += negative ? " - " + term : " + " + term;
  }
  return s;
}

}  // namespace gevrey
