#include <algorithm>
#include <map>

#include "gevrey/solutions.hpp"
#include "gevrey/theta.hpp"

namespace gevrey {

namespace {

// Coefficient vector over log powers 0..K, one column per free parameter.
using Block = std::vector<std::vector<Rat>>;

Rat rising(long k, long l) {
  Rat r(1);
  for (long t = 1; t <= l; ++t) r *= Rat(k + t);
  return r;
}

// p(g + N) applied to y, with (N y)_k = (k + 1) y_{k+1}: the action of p(T)
// on sum_k y_k w^g log^k w.
Block act(const Poly& p, const Rat& g, const Block& y) {
  Poly t = p.shift(g);
  std::size_t K = y.size(), P = y.empty() ? 0 : y[0].size();
  Block out(K, std::vector<Rat>(P));
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t l = 0; k + l < K && static_cast<int>(l) <= t.degree(); ++l) {
      Rat c = t[l];
      if (c == 0) continue;
      c *= rising(static_cast<long>(k), static_cast<long>(l));
      for (std::size_t q = 0; q < P; ++q) out[k][q] += c * y[k + l][q];
    }
  return out;
}

struct ClassResult {
  std::vector<FormalSolution> solutions;
};

// All solutions w^{alpha+n} sum_k c_{n,k} log^k w whose exponents lie in
// alpha + Z, where roots lists the indicial roots of that class.
ClassResult solve_class(const LaurentTheta& lt, const std::vector<RootMultiplicity>& roots,
                        std::size_t N, const Rat& center) {
  const Rat alpha = roots.front().root;
  int total = 0;
  std::map<long, int> resonance;  // n -> multiplicity
  for (const auto& r : roots) {
    total += r.multiplicity;
    resonance[Rat(r.root - alpha).get_num().get_si()] = r.multiplicity;
  }
  const std::size_t K = static_cast<std::size_t>(total);
  const std::size_t P = K;
  std::size_t steps = std::max<std::size_t>(N, static_cast<std::size_t>(resonance.rbegin()->first) + 1);

  const int v0 = lt.begin()->first;
  const Poly& p0 = lt.begin()->second;
  std::vector<Block> c;
  std::vector<Rat> param_root(P);
  std::size_t next_param = 0;

  for (std::size_t n = 0; n < steps; ++n) {
    Rat beta = alpha + Rat(static_cast<long>(n));
    Block rhs(K, std::vector<Rat>(P));
    for (auto it = std::next(lt.begin()); it != lt.end(); ++it) {
      std::size_t d = static_cast<std::size_t>(it->first - v0);
      if (d > n) break;
      Block t = act(it->second, beta - Rat(static_cast<long>(d)), c[n - d]);
      for (std::size_t k = 0; k < K; ++k)
        for (std::size_t q = 0; q < P; ++q) rhs[k][q] -= t[k][q];
    }
    Poly t = p0.shift(beta);
    auto res = resonance.find(static_cast<long>(n));
    std::size_t m = res == resonance.end() ? 0 : static_cast<std::size_t>(res->second);
    Block cn(K, std::vector<Rat>(P));
    for (std::size_t k = K - m; k < K; ++k)
      for (std::size_t q = 0; q < P; ++q)
        if (rhs[k][q] != 0) throw Error("inconsistent Frobenius system");
    for (std::size_t kk = K - m; kk-- > 0;) {
      std::size_t target = kk + m;
      for (std::size_t q = 0; q < P; ++q) {
        Rat acc = rhs[kk][q];
        for (std::size_t l = m + 1; kk + l < K && static_cast<int>(l) <= t.degree(); ++l)
          acc -= t[l] * rising(static_cast<long>(kk), static_cast<long>(l)) * cn[kk + l][q];
        cn[target][q] = acc / (t[m] * rising(static_cast<long>(kk), static_cast<long>(m)));
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      cn[j][next_param] = 1;
      param_root[next_param] = beta;
      ++next_param;
    }
    c.push_back(std::move(cn));
  }

  ClassResult out;
  Rat prec = alpha + Rat(static_cast<long>(steps));
  for (std::size_t q = 0; q < P; ++q) {
    PuiseuxLogSeries s(Expansion::AtZero, prec, center);
    int logdeg = 0;
    for (std::size_t n = 0; n < steps; ++n)
      for (std::size_t k = 0; k < K; ++k)
        if (c[n][k][q] != 0) {
          s.add(alpha + Rat(static_cast<long>(n)), static_cast<int>(k), c[n][k][q]);
          logdeg = std::max(logdeg, static_cast<int>(k));
        }
    out.solutions.push_back({0, param_root[q], logdeg, std::move(s)});
  }
  return out;
}

}  // namespace

std::map<Rat, std::vector<std::size_t>> FormalSolutionBasis::groups() const {
  std::map<Rat, std::vector<std::size_t>> g;
  for (std::size_t i = 0; i < solutions.size(); ++i) g[solutions[i].zeta].push_back(i);
  return g;
}

FormalSolutionBasis frobenius_basis(const DiffOp& op, const Rat& at, std::size_t N) {
  if (op.order() < 1) throw Error("frobenius_basis requires positive order");
  FormalSolutionBasis b;
  b.at = at;
  b.expected = op.order();
  DiffOp local = at == 0 ? op : local_operator(op, at, 1);
  LaurentTheta lt = to_laurent_theta(local);
  const Poly& p0 = lt.begin()->second;
  if (p0.degree() < op.order()) {
    b.deficient = true;
    b.notes.push_back("irregular singular point: " + std::to_string(std::max(p0.degree(), 0)) +
                      " of " + std::to_string(op.order()) + " exponents");
  }
  if (p0.degree() < 1) return b;
  auto rr = rational_roots(p0);
  if (!rr.remainder.is_constant()) {
    b.deficient = true;
    b.notes.push_back("non-rational indicial factor " + to_string(rr.remainder, "X"));
  }
  std::map<Rat, std::vector<RootMultiplicity>> classes;
  for (const auto& r : rr.roots) classes[frac_of(r.root)].push_back(r);
  for (const auto& [cls, roots] : classes) {
    auto res = solve_class(lt, roots, N, at);
    for (auto& s : res.solutions) b.solutions.push_back(std::move(s));
  }
  return b;
}

}  // namespace gevrey
