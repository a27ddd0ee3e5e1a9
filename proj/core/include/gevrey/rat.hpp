#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gevrey {

using Integer = mpz_class;
using Rat = mpq_class;

// Raised on precondition violations and malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rat rat(long num, long den = 1);
// Accepts "p", "-p", "p/q".
Rat rat_from_string(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const Integer& z);

bool is_integer(const Rat& r);
Integer floor_of(const Rat& r);
// r - floor(r), in [0, 1).
Rat frac_of(const Rat& r);
Rat abs_of(const Rat& r);

// Least positive d with d*v integral for every v.
Integer den_lcm(std::span<const Rat> values);

Integer factorial(unsigned long n);
// (a)_n = a(a+1)...(a+n-1)
Rat pochhammer(const Rat& a, unsigned long n);
Rat binomial(const Rat& top, unsigned long k);
Integer binomial_int(unsigned long n, unsigned long k);
Rat power(const Rat& base, unsigned long e);

// Natural logarithm of |x| for nonzero x, robust for huge values.
double log_abs(const Integer& x);
double log_abs(const Rat& x);

// Prime factorization of |n| > 0 as (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);
std::vector<Integer> positive_divisors(const Integer& n);
bool is_prime(unsigned long p);

}  // namespace gevrey
