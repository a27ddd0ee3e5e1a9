#include "gevrey/rat.hpp"

#include <algorithm>
#include <cmath>

namespace gevrey {

Rat rat(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error("malformed rational '" + s + "'");
  Integer n(num), d(den);
  if (d == 0) throw Error("zero denominator in '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Integer floor_of(const Rat& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat frac_of(const Rat& r) { return r - Rat(floor_of(r)); }

Rat abs_of(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Integer den_lcm(std::span<const Rat> values) {
  Integer d = 1;
  for (const auto& v : values) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  }
  return d;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rat pochhammer(const Rat& a, unsigned long n) {
  Rat p = 1;
  for (unsigned long i = 0; i < n; ++i) p *= a + Rat(static_cast<long>(i));
  return p;
}

Rat binomial(const Rat& top, unsigned long k) {
  Rat b = 1;
  for (unsigned long i = 0; i < k; ++i) {
    b *= top - Rat(static_cast<long>(i));
    b /= Rat(static_cast<long>(i + 1));
  }
  return b;
}

Integer binomial_int(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rat power(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

double log_abs(const Integer& x) {
  if (x == 0) throw Error("log of zero");
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rat& x) { return log_abs(x.get_num()) - log_abs(x.get_den()); }

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(Integer(n / d), primes);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n_in) {
  Integer n = n_in;
  mpz_abs(n.get_mpz_t(), n.get_mpz_t());
  if (n == 0) throw Error("cannot factor zero");
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
    if (Integer(p) * p > n) break;
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace gevrey
