#include <sstream>

#include "gevrey/solutions.hpp"

namespace gevrey {

namespace {

using u64 = unsigned long;

// Polynomials over F_p, lowest degree first, no trailing zeros.
struct ModP {
  u64 p;

  using P = std::vector<u64>;

  void trim(P& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  u64 mulm(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 inv(u64 a) const {
    u64 r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mulm(r, a);
      a = mulm(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 reduce(const Rat& r) const {
    Integer n = r.get_num() % Integer(p), d = r.get_den() % Integer(p);
    if (n < 0) n += p;
    if (d == 0) throw Error("prime " + std::to_string(p) + " divides a coefficient denominator");
    return mulm(n.get_ui(), inv(d.get_ui()));
  }
  P from(const Poly& q) const {
    P a;
    for (const auto& c : q.coeffs()) a.push_back(reduce(c));
    trim(a);
    return a;
  }
  P add(P a, const P& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    trim(a);
    return a;
  }
  P neg(P a) const {
    for (auto& c : a) c = c ? p - c : 0;
    return a;
  }
  P sub(const P& a, const P& b) const { return add(a, neg(b)); }
  P scal(P a, u64 s) const {
    for (auto& c : a) c = mulm(c, s);
    trim(a);
    return a;
  }
  P mul(const P& a, const P& b) const {
    if (a.empty() || b.empty()) return {};
    P out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulm(a[i], b[j])) % p;
    trim(out);
    return out;
  }
  P deriv(const P& a) const {
    P out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mulm(a[i], i % p));
    trim(out);
    return out;
  }
  std::pair<P, P> divmod(P a, const P& b) const {
    P q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    u64 il = inv(b.back());
    while (!a.empty() && a.size() >= b.size()) {
      std::size_t s = a.size() - b.size();
      u64 f = mulm(a.back(), il);
      q[s] = f;
      for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = (a[s + i] + p - mulm(f, b[i])) % p;
      trim(a);
    }
    trim(q);
    return {q, a};
  }
  P monic(const P& a) const { return a.empty() ? a : scal(a, inv(a.back())); }
  P gcd(P a, P b) const {
    while (!b.empty()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
};

}  // namespace

bool PCurvatureReport::zero() const {
  for (const auto& row : matrix)
    for (const auto& e : row)
      if (!e.num.empty()) return false;
  return true;
}

PCurvatureReport p_curvature(const DiffOp& op_in, u64 p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (op_in.order() < 1) throw Error("p-curvature requires positive order");
  DiffOp op = normalized(op_in);
  ModP F{p};
  const int mu = op.order();
  std::vector<ModP::P> q;
  for (const auto& c : op.coeffs()) q.push_back(F.from(c));
  const ModP::P& Q = q.back();
  if (Q.empty())
    throw Error("bad prime " + std::to_string(p) + ": leading coefficient " + to_string(op.lead()) +
                " vanishes mod p");
  ModP::P dQ = F.deriv(Q);

  // Column j holds the numerators of D^k e_j over Q^k.
  const std::size_t M = static_cast<std::size_t>(mu);
  std::vector<std::vector<ModP::P>> cols(M, std::vector<ModP::P>(M));
  for (std::size_t j = 0; j < M; ++j) cols[j][j] = {1};
  for (u64 k = 0; k < p; ++k) {
    u64 km = k % p;
    for (std::size_t j = 0; j < M; ++j) {
      auto& w = cols[j];
      std::vector<ModP::P> next(M);
      for (std::size_t i = 0; i < M; ++i) {
        ModP::P v = F.sub(F.mul(F.deriv(w[i]), Q), F.scal(F.mul(dQ, w[i]), km));
        if (i > 0) v = F.add(v, F.mul(Q, w[i - 1]));
        v = F.sub(v, F.mul(q[i], w[M - 1]));
        next[i] = std::move(v);
      }
      w = std::move(next);
    }
  }
  // Matrix entry (i, j) = cols[j][i] / Q^p.
  ModP::P Qp{1};
  for (u64 k = 0; k < p; ++k) Qp = F.mul(Qp, Q);

  PCurvatureReport rep;
  rep.p = p;
  rep.matrix.assign(M, std::vector<PCurvatureReport::Entry>(M));
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) {
      const auto& num = cols[j][i];
      if (num.empty()) {
        rep.matrix[i][j] = {{}, {1}};
        continue;
      }
      ModP::P g = F.gcd(num, Qp);
      auto n = F.divmod(num, g).first;
      auto d = F.divmod(Qp, g).first;
      u64 il = F.inv(d.back());
      rep.matrix[i][j] = {F.scal(n, il), F.scal(d, il)};
    }

  // Nilpotence on the numerator matrix W: (W/Q^p)^k = W^k / Q^{pk}.
  std::vector<std::vector<ModP::P>> W(M, std::vector<ModP::P>(M)), Wk;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) W[i][j] = cols[j][i];
  Wk = W;
  auto is_zero = [&](const std::vector<std::vector<ModP::P>>& A) {
    for (const auto& r : A)
      for (const auto& e : r)
        if (!e.empty()) return false;
    return true;
  };
  for (int k = 1; k <= mu; ++k) {
    if (is_zero(Wk)) {
      rep.nilpotent = true;
      rep.nilpotency_index = k;
      break;
    }
    std::vector<std::vector<ModP::P>> nxt(M, std::vector<ModP::P>(M));
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j)
        for (std::size_t l = 0; l < M; ++l) nxt[i][j] = F.add(nxt[i][j], F.mul(Wk[i][l], W[l][j]));
    Wk = std::move(nxt);
  }
  return rep;
}

std::string to_string(const PCurvatureReport::Entry& e) {
  auto poly = [](const std::vector<u64>& a) {
    if (a.empty()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || a[i] != 1) os << a[i];
      if (i > 0) os << (a[i] != 1 ? "*" : "") << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
  };
  if (e.den.size() <= 1) return poly(e.num);
  return "(" + poly(e.num) + ")/(" + poly(e.den) + ")";
}

}  // namespace gevrey
