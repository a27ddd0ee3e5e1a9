#include "gevrey/series.hpp"
#include "helpers.hpp"

using namespace gevrey;
using namespace gevrey::test;

TEST_CASE("rationals stay canonical") {
  CHECK(rat(-21, 3) == 7 * Rat(-1));
  CHECK(to_string(rat(6, -4)) == "-3/2");
  CHECK(rat_from_string("-12/8") == q(-3, 2));
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("x"), Error);
  CHECK(frac_of(q(-5, 2)) == q(1, 2));
  CHECK(floor_of(q(-5, 2)) == -3);
}

TEST_CASE("den_lcm") {
  std::vector<Rat> a{1, q(1, 2), q(1, 3)};
  CHECK(den_lcm(a) == 6);
  std::vector<Rat> b{0};
  CHECK(den_lcm(b) == 1);
  std::vector<Rat> c{q(1, 4), q(1, 6), q(5, 8)};
  CHECK(den_lcm(c) == 24);
}

TEST_CASE("den_lcm agrees with brute force") {
  cli::Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rat> v;
    for (int i = 0; i < 4; ++i) v.push_back(cli::random_rat(rng, 9, 12));
    Integer d = den_lcm(v);
    auto clears = [&](long k) {
      for (const auto& x : v)
        if (!is_integer(x * k)) return false;
      return true;
    };
    long least = 1;
    while (!clears(least)) ++least;
    CHECK(d == least);
  }
}

TEST_CASE("rational roots") {
  auto r = rational_roots(poly({0, -6, 9}));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == RootMultiplicity{0, 1});
  CHECK(r.roots[1] == RootMultiplicity{q(2, 3), 1});
  CHECK(r.remainder == Poly(1));

  auto s = rational_roots(poly({1, 0, 1}));
  CHECK(s.roots.empty());
  CHECK(s.remainder == poly({1, 0, 1}));

  // (X - 1/2)^2 (X + 2)
  auto t = rational_roots(Poly::from_roots({q(1, 2), q(1, 2), -2}));
  REQUIRE(t.roots.size() == 2);
  CHECK(t.roots[0] == RootMultiplicity{-2, 1});
  CHECK(t.roots[1] == RootMultiplicity{q(1, 2), 2});
  CHECK(t.remainder == Poly(1));
}

TEST_CASE("rational roots of random products") {
  cli::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rat> roots;
    for (int i = 0; i < 3; ++i) roots.push_back(cli::random_rat(rng, 7, 4));
    Poly p = Poly::from_roots(roots) * poly({1, 0, 1}) * cli::random_nonzero_rat(rng);
    auto r = rational_roots(p);
    int total = 0;
    for (const auto& m : r.roots) {
      CHECK(p.eval(m.root) == 0);
      total += m.multiplicity;
    }
    CHECK(total == 3);
    CHECK(r.remainder == poly({1, 0, 1}));
  }
}

TEST_CASE("polynomial arithmetic") {
  Poly a = poly({1, 2, 3}), b = poly({-1, 1});
  auto [qt, rm] = divmod(a, b);
  CHECK(qt * b + rm == a);
  CHECK(rm.degree() < 1);
  CHECK(gcd(a * b, b * b) == b.monic());
  CHECK(a.shift(1) == poly({6, 8, 3}));
  CHECK(a.compose(b) == poly({2, -4, 3}));
  CHECK(Poly::falling(3) == poly({0, 2, -3, 1}));
  CHECK(to_string(poly({q(1, 2), -1, 3})) == "3*z^2 - z + 1/2");
  CHECK(to_string(Poly()) == "0");
  CHECK_THROWS_AS(exact_div(a, b), Error);
}

TEST_CASE("squarefree factorization") {
  Poly p = pow(poly({-1, 1}), 3) * poly({1, 0, 1});
  auto f = squarefree_factorization(p);
  Poly back(1);
  for (const auto& [g, e] : f) back *= pow(g, static_cast<unsigned>(e));
  CHECK(back == p.monic());
}

TEST_CASE("rational functions are normalized") {
  RatFun f(poly({-1, 0, 1}), poly({-2, 2}));  // (z^2 - 1) / (2z - 2)
  CHECK(f.den() == Poly(1));
  CHECK(f.num() == poly({q(1, 2), q(1, 2)}));
  RatFun g(Poly(1), poly({0, 1}));
  CHECK((g * RatFun(poly({0, 1}))).is_polynomial());
  CHECK(g.derivative() == RatFun(Poly(-1), poly({0, 0, 1})));
}

TEST_CASE("truncated composition") {
  CHECK(poly_compose_truncated({1, 1}, {0, 1}, 3) == Series{1, 1, 0, 0});
  Series e = exp_series(1, 4);
  Series geo = poly_compose_truncated(e, log_one_over_one_minus(4), 4);
  CHECK(geo == Series{1, 1, 1, 1, 1});
  CHECK(poly_compose_truncated({0, 1}, {0, 1, 1}, 2) == Series{0, 1, 1});
  // 1 - e^{-w} inverts log 1/(1-z)
  CHECK(poly_compose_truncated(one_minus_exp_neg(8), log_one_over_one_minus(8), 8) == Series{0, 1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("series inverse") {
  Series a{1, -1};
  CHECK(series_inverse(a, 5) == Series{1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(series_inverse(Series{0, 1}, 3), Error);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(10) == 3628800);
  CHECK(pochhammer(q(2, 3), 2) == q(10, 9));
  CHECK(binomial(q(1, 2), 2) == q(-1, 8));
  auto f = factor_integer(360);
  CHECK(f.size() == 3);
  CHECK(positive_divisors(12).size() == 6);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(91));
}
