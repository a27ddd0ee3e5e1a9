#include "gevrey/laplace.hpp"

#include <map>
#include <optional>

namespace gevrey {

namespace {

bool is_pole(const Rat& alpha) { return is_integer(alpha) && alpha <= -1; }

// Laurent coefficients g_l, l = -pole..k, of Gamma(alpha + 1 + e) in e.
std::map<int, SeedCombo> gamma_laurent(const Rat& alpha, int k) {
  std::map<int, SeedCombo> g;
  if (!is_pole(alpha)) {
    for (int l = 0; l <= k; ++l)
      g[l] = gamma_value(alpha + 1, l) * Rat(1, factorial(static_cast<unsigned long>(l)));
    return g;
  }
  // Gamma(-r + e) = Gamma(1 + e) / (e (e - 1) ... (e - r))
  long r = Rat(-alpha - 1).get_num().get_si();
  std::size_t terms = static_cast<std::size_t>(k + 2);
  Series h{Rat(1)};
  for (long t = 1; t <= r; ++t) {
    // 1/(e - t) = -(1/t) sum (e/t)^n
    Series inv(terms);
    for (std::size_t n = 0; n < terms; ++n) inv[n] = -power(Rat(1, t), n + 1);
    h = series_mul(h, inv, terms - 1);
  }
  for (int l = -1; l <= k; ++l) {
    SeedCombo acc;
    for (int a = 0; a <= l + 1; ++a) {
      std::size_t b = static_cast<std::size_t>(l + 1 - a);
      if (b >= h.size() || h[b] == 0) continue;
      acc += gamma_value(Rat(1), a) * Rat(h[b] / Rat(factorial(static_cast<unsigned long>(a))));
    }
    g[l] = acc;
  }
  return g;
}

// a = r * b for a rational r, if such r exists.
std::optional<Rat> ratio(const SeedCombo& a, const SeedCombo& b) {
  if (b.is_zero()) return std::nullopt;
  std::optional<Rat> r;
  auto check = [&](const Rat& num, const Rat& den) {
    if (den == 0) return num == 0;
    Rat q = num / den;
    if (!r) r = q;
    return *r == q;
  };
  if (!check(a.rational(), b.rational())) return std::nullopt;
  for (const auto& [s, c] : b.seeds())
    if (!check(a.seeds().count(s) ? a.seeds().at(s) : Rat(0), c)) return std::nullopt;
  for (const auto& [s, c] : a.seeds())
    if (!b.seeds().count(s)) return std::nullopt;
  return r ? *r : Rat(0);
}

constexpr int kExact = 1 << 20;

}  // namespace

Series laplace_series(const Series& F) {
  Series out(F.size());
  for (std::size_t n = 0; n < F.size(); ++n) out[n] = F[n] * Rat(factorial(n));
  return out;
}

Series borel_series(const Series& plus) {
  Series out(plus.size());
  for (std::size_t n = 0; n < plus.size(); ++n) out[n] = plus[n] / Rat(factorial(n));
  return out;
}

PuiseuxLogSeries plus_side(const Series& plus) {
  return PuiseuxLogSeries::from_series(plus, Expansion::AtInfinity, Rat(-1));
}

PuiseuxLogSeries laplace_puiseux(const Rat& alpha, int k) {
  if (k < 0) throw Error("negative log degree");
  PuiseuxLogSeries out(Expansion::AtInfinity, kExact);
  Rat e = -alpha - 1;
  auto g = gamma_laurent(alpha, k);
  int top = is_pole(alpha) ? k + 1 : k;
  Rat kf(factorial(static_cast<unsigned long>(k)));
  for (int j = 0; j <= top; ++j) {
    Rat w = kf / Rat(factorial(static_cast<unsigned long>(j)));
    if (j % 2 != 0) w = -w;
    out.add(e, j, g.at(k - j) * w);
  }
  return out;
}

PuiseuxLogSeries laplace_full(const PuiseuxLogSeries& y) {
  if (y.expansion() != Expansion::AtZero || y.center() != 0 || y.orientation() != 1)
    throw Error("laplace_full expects an expansion at 0");
  PuiseuxLogSeries out(Expansion::AtInfinity, y.precision() + 1);
  for (const auto& [key, c] : y.terms()) {
    if (!c.is_rational()) throw Error("laplace_full needs rational coefficients");
    auto image = laplace_puiseux(key.exponent, key.log_power);
    for (const auto& [k2, t] : image.terms())
      out.add(k2.exponent, k2.log_power, t * c.rational());
  }
  return out;
}

PuiseuxLogSeries laplace_inverse(const PuiseuxLogSeries& plus) {
  if (plus.expansion() != Expansion::AtInfinity) throw Error("laplace_inverse expects an expansion at infinity");
  PuiseuxLogSeries out(Expansion::AtZero, plus.precision() - 1);
  std::map<Rat, std::map<int, SeedCombo>> groups;
  for (const auto& [key, c] : plus.terms()) groups[key.exponent][key.log_power] = c;

  for (auto& [e, logs] : groups) {
    Rat beta = -e - 1;
    bool pole = is_pole(beta);
    int J = logs.rbegin()->first;
    int K = pole ? J - 1 : J;
    if (K < 0) throw Error("z^" + to_string(e) + " is not in the image of the transform");
    std::vector<PuiseuxLogSeries> T;
    for (int k = 0; k <= K; ++k) T.push_back(laplace_puiseux(beta, k));
    std::vector<Rat> x(static_cast<std::size_t>(K + 1));
    auto residual = [&](int j) {
      SeedCombo r = logs.count(j) ? logs.at(j) : SeedCombo();
      for (int k = 0; k <= K; ++k)
        if (x[static_cast<std::size_t>(k)] != 0)
          r -= T[static_cast<std::size_t>(k)].coeff(e, j) * x[static_cast<std::size_t>(k)];
      return r;
    };
    for (int k = K; k >= 0; --k) {
      int j = pole ? k + 1 : k;
      auto q = ratio(residual(j), T[static_cast<std::size_t>(k)].coeff(e, j));
      if (!q) throw Error("coefficient at z^" + to_string(e) + " is not in the image of the transform");
      x[static_cast<std::size_t>(k)] = *q;
    }
    for (int j = 0; j <= J; ++j)
      if (!residual(j).is_zero())
        throw Error("coefficient at z^" + to_string(e) + " is not in the image of the transform");
    for (int k = 0; k <= K; ++k)
      if (x[static_cast<std::size_t>(k)] != 0) out.add(beta, k, x[static_cast<std::size_t>(k)]);
  }
  return out;
}

LaplacePair laplace_pair(const PuiseuxLogSeries& y) { return {y, laplace_full(y)}; }

RhoTable rho_table(const Rat& alpha, int K, int M) {
  if (K < 0 || M < 0) throw Error("rho_table needs K, M >= 0");
  RhoTable t;
  t.alpha = alpha;
  t.K = K;
  std::vector<SeedCombo> base;
  for (int i = 0; i <= K; ++i) base.push_back(rho_symbol(alpha, i));
  t.rows[0] = base;

  std::vector<SeedCombo> prev = base;
  for (int m = 1; m <= M; ++m) {
    Rat d = alpha + m;
    if (d == 0) {
      t.flagged.push_back(m);
      break;
    }
    std::vector<SeedCombo> row(prev.size());
    for (int j = 0; j <= K; ++j) {
      row[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j)];
      if (j < K) row[static_cast<std::size_t>(j)] -= prev[static_cast<std::size_t>(j + 1)] * Rat(Rat(j + 1) / d);
    }
    t.rows[m] = row;
    prev = std::move(row);
  }
  prev = base;
  for (int m = -1; m >= -M; --m) {
    Rat d = alpha + m + 1;
    if (d == 0) {
      t.flagged.push_back(m);
      break;
    }
    std::vector<SeedCombo> row(prev.size());
    for (int j = K; j >= 0; --j) {
      row[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j)];
      if (j < K) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j + 1)] * Rat(Rat(j + 1) / d);
    }
    t.rows[m] = row;
    prev = std::move(row);
  }
  return t;
}

Rat partie_finie_sum(const Rat& alpha, unsigned n) {
  Rat s;
  for (unsigned m = 0; m <= n; ++m) {
    Rat d = Rat(m) + alpha + 1;
    if (d == 0) throw Error("-alpha-1 lies in 0..n");
    Rat t = Rat(1) / (Rat(factorial(m)) * Rat(factorial(n - m)) * d);
    s += m % 2 == 0 ? t : Rat(-t);
  }
  return s;
}

}  // namespace gevrey
