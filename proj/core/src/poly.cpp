#include "gevrey/poly.hpp"

#include <algorithm>
#include <optional>

namespace gevrey {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, unsigned degree) {
  if (c == 0) return {};
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
  Poly p(1);
  for (const auto& r : roots) p *= Poly({Rat(-r), Rat(1)});
  return p;
}

Poly Poly::falling(unsigned k) {
  Poly p(1);
  for (unsigned i = 0; i < k; ++i) p *= Poly({Rat(-static_cast<long>(i)), Rat(1)});
  return p;
}

Poly Poly::rising_from_one(unsigned k) {
  Poly p(1);
  for (unsigned i = 1; i <= k; ++i) p *= Poly({Rat(static_cast<long>(i)), Rat(1)});
  return p;
}

const Rat& Poly::lead() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

int Poly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::shift(const Rat& a) const { return compose(Poly({a, Rat(1)})); }

Poly Poly::scale_var(const Rat& a) const {
  std::vector<Rat> v = c_;
  Rat pw = 1;
  for (auto& c : v) {
    c *= pw;
    pw *= a;
  }
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rat l = lead();
  Poly p = *this;
  for (auto& c : p.c_) c /= l;
  return p;
}

Integer coeff_den_lcm(const Poly& p) { return den_lcm(p.coeffs()); }

Integer coeff_num_gcd(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Rat scale(coeff_den_lcm(*this), coeff_num_gcd(*this));
  scale.canonicalize();
  if (lead() < 0) scale = -scale;
  return *this * scale;
}

Poly Poly::mul_xpow(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::div_xpow(unsigned k) const {
  if (k >= c_.size()) return {};
  return Poly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

Poly Poly::truncated(std::size_t terms) const {
  if (terms >= c_.size()) return *this;
  return Poly(std::vector<Rat>(c_.begin(), c_.begin() + static_cast<long>(terms)));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rat inv = 1 / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Rat c = r[static_cast<std::size_t>(k)] * inv;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a_in, const Poly& b_in) {
  // Primitive remainder sequence keeps coefficient sizes in check.
  Poly a = a_in.primitive(), b = b_in.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

Poly pow(const Poly& p, unsigned e) {
  Poly r(1), base = p;
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

namespace {

// Exact test p(num/den) == 0 through the homogenized integer form.
bool vanishes_at(const std::vector<Integer>& ic, const Integer& num, const Integer& den) {
  std::size_t n = ic.size() - 1;
  std::vector<Integer> den_pow(n + 1);
  den_pow[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) den_pow[k] = den_pow[k - 1] * den;
  Integer acc = 0, num_pow = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    acc += ic[k] * num_pow * den_pow[n - k];
    num_pow *= num;
  }
  return acc == 0;
}

std::optional<Rat> find_rational_root(const Poly& p) {
  std::vector<Integer> ic;
  for (const auto& c : p.coeffs()) ic.push_back(c.get_num());
  std::vector<Integer> nums = positive_divisors(ic.front());
  std::vector<Integer> dens = positive_divisors(ic.back());
  for (const auto& q : dens) {
    for (const auto& a : nums) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sgn : {1, -1}) {
        Integer num = a * sgn;
        if (vanishes_at(ic, num, q)) {
          Rat r(num, q);
          r.canonicalize();
          return r;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RationalRoots rational_roots(const Poly& p_in) {
  if (p_in.is_zero()) throw Error("rational_roots of zero polynomial");
  RationalRoots out;
  Poly p = p_in.primitive();
  int v = p.valuation();
  if (v > 0) {
    out.roots.push_back({Rat(0), v});
    p = p.div_xpow(static_cast<unsigned>(v));
  }
  while (p.degree() > 0) {
    auto r = find_rational_root(p);
    if (!r) break;
    Poly lin({Rat(-*r), Rat(1)});
    int mult = 0;
    while (p.degree() > 0) {
      auto [q, rem] = divmod(p, lin);
      if (!rem.is_zero()) break;
      p = q.primitive();
      ++mult;
    }
    out.roots.push_back({*r, mult});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
  out.remainder = p.monic();
  return out;
}

std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  Poly a = p.monic();
  Poly b = a.derivative();
  Poly c = gcd(a, b);
  Poly w = exact_div(a, c);
  Poly y = exact_div(b, c);
  Poly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rat mag = abs_of(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) {
      mono = std::string(var);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty())
      s += to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += to_string(mag) + "*" + mono;
  }
  return s;
}

}  // namespace gevrey
