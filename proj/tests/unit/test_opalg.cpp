#include "gevrey/theta.hpp"
#include "helpers.hpp"

using namespace gevrey;
using namespace gevrey::test;

TEST_CASE("Weyl product") {
  CHECK(op("D") * op("z") == op("z*D + 1"));
  CHECK(op("z*D - 2*z + 1") * op("(z-1)*D - z") ==
        op("z*(z-1)*D^2 + (-3*z^2 + 4*z - 1)*D + 2*z^2 - 2*z"));
  DiffOp a = op("z^2*D^2 + 3*D - z");
  CHECK(a * DiffOp(Poly(1)) == a);
}

TEST_CASE("Weyl product is associative") {
  cli::Rng rng(1);
  for (int t = 0; t < 60; ++t) {
    DiffOp a = cli::random_diffop(rng, 2, 2), b = cli::random_diffop(rng, 2, 2), c = cli::random_diffop(rng, 2, 2);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("adjoint") {
  CHECK(normalized(adjoint(op("D"))) == op("D"));
  CHECK(adjoint(op("z")) == op("z"));
  CHECK(adjoint(op("z*D")) == op("-z*D - 1"));
  CHECK(normalized(adjoint(op("z*D"))) == op("z*D + 1"));
  cli::Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    DiffOp a = cli::random_diffop(rng), b = cli::random_diffop(rng);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
  }
}

TEST_CASE("Fourier-Laplace transform") {
  // Oracle: term-by-term substitution in tests/oracles/derive.py.
  CHECK(normalized(fourier_laplace(op("D^2 - z"), false)) == op("D + z^2"));
  CHECK(normalized(fourier_laplace(op("-(z-1)*(z-2)*D + 3 - z"), true)) == op("z*D^2 + (1-3*z)*D + 2*z"));
  CHECK(normalized(fourier_laplace(op("z*D^2 + (1-z)*D - 1"), true)) == nop("z*(1+z)*D + z"));
}

TEST_CASE("Fourier-Laplace twice is the symmetry") {
  cli::Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    DiffOp a = cli::random_diffop(rng);
    CHECK(symmetry(fourier_laplace(fourier_laplace(a, false), false)) == a);
    CHECK(fourier_laplace(fourier_laplace(a, true), true) == symmetry(a));
  }
}

TEST_CASE("right division") {
  DiffOp phi = op("z*D^2 + (1-3*z)*D + 2*z"), theta = op("(z-1)*D - z");
  auto d = right_divide(DiffOp(poly({-1, 1})) * phi, theta);
  CHECK(d.remainder.is_zero());
  CHECK(d.quotient == to_ratfun(op("z*D - 2*z + 1")));

  auto e = right_divide(op("D^2"), op("D"));
  CHECK(e.quotient == to_ratfun(op("D")));
  CHECK(e.remainder.is_zero());

  auto f = right_divide(theta, theta);
  CHECK(f.quotient == to_ratfun(DiffOp(Poly(1))));
}

TEST_CASE("right division identity on random operators") {
  cli::Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    DiffOp a = cli::random_diffop(rng), b;
    while (b.order() < 1) b = cli::random_diffop(rng);
    auto d = right_divide(a, b);
    CHECK(d.quotient * to_ratfun(b) + d.remainder == to_ratfun(a));
    CHECK(d.remainder.order() < b.order());
  }
}

TEST_CASE("lclm") {
  CHECK(lclm(op("D"), op("D")) == op("D"));
  CHECK(lclm(op("D - 1"), op("D - 2")) == op("D^2 - 3*D + 2"));
  DiffOp l = lclm(op("z*D - 1"), op("D"));
  CHECK(l.order() == 2);
  CHECK(apply(l, at_zero({0, 1})).is_zero());
  CHECK(apply(l, at_zero({1})).is_zero());
  CHECK(right_divide(l, op("z*D - 1")).remainder.is_zero());
  CHECK(right_divide(l, op("D")).remainder.is_zero());
}

TEST_CASE("lclm annihilates both exponentials") {
  DiffOp l = lclm(op("D - 1"), op("D - 2"));
  CHECK(apply(l, at_zero(exp_series(1, 30))).is_zero());
  CHECK(apply(l, at_zero(exp_series(2, 30))).is_zero());
}

TEST_CASE("theta form") {
  auto a = theta_form(op("z*D"));
  CHECK(a.m == 0);
  CHECK(a.op.b == std::vector<Poly>{Poly(), Poly(1)});

  auto b = theta_form(op("D^2 - z"));
  CHECK(b.m == 2);
  CHECK(b.op.b == std::vector<Poly>{Poly::monomial(-1, 3), Poly(-1), Poly(1)});

  auto c = theta_form(op("z*D^2 + (1-3*z)*D + 2*z"));
  CHECK(c.m == 1);
  CHECK(c.op.b == std::vector<Poly>{Poly::monomial(2, 2), Poly::monomial(-3, 1), Poly(1)});
}

TEST_CASE("ramify and descend") {
  CHECK(normalized(ramify(op("T - 1"), 2)) == nop("T - 2"));
  CHECK(normalized(ramify(op("D^2 - z"), 2)) == nop("z*D^2 - D - 4*z^5"));
  CHECK(normalized(descend(op("T^2 - 2*T - 4*z^6"), 3)) == nop("9*T^2 - 6*T - 4*z^2"));
  CHECK(normalized(descend(op("T - 2"), 2)) == nop("T - 1"));
  CHECK_THROWS_AS(descend(op("T - z"), 2), Error);
  DiffOp airy = op("D^2 - z");
  CHECK(normalized(ramify(airy, 1)) == normalized(airy));
}

TEST_CASE("descend undoes ramify") {
  cli::Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    DiffOp a = cli::random_diffop(rng);
    if (a.is_zero()) continue;
    auto u = static_cast<unsigned>(cli::uniform(rng, 1, 3));
    CHECK(normalized(strip_z(descend(ramify(a, u), u))) == normalized(strip_z(a)));
  }
}

TEST_CASE("ramified Airy kills y(z^2)") {
  Series t(61);
  t[0] = 1;
  for (std::size_t n = 3; n <= 60; ++n) t[n] = t[n - 3] / Rat(static_cast<long>(n * (n - 1)));
  Series t2(121);
  for (std::size_t n = 0; n <= 60; ++n) t2[2 * n] = t[n];
  CHECK(apply(ramify(op("D^2 - z"), 2), at_zero(t2)).is_zero());
}

TEST_CASE("invert") {
  CHECK(normalized(invert(op("T - 1"))) == nop("T + 1"));
  CHECK(normalized(invert(op("D"))) == op("z^2*D"));
  // 1/(1 - 1/z) = sum z^{-n}
  PuiseuxLogSeries s(Expansion::AtInfinity, 30);
  for (int n = 0; n < 30; ++n) s.add(-n, 0, 1);
  CHECK(apply(invert(op("(1-z)*D - 1")), s).is_zero());
}

TEST_CASE("twist") {
  CHECK(twist_exp(op("D"), 1) == op("D - 1"));
  CHECK(twist_exp(op("D - 1"), -1) == op("D"));
  CHECK(twist_exp(op("D^2 - 2*D + 1"), -1) == op("D^2"));
}

TEST_CASE("apply") {
  Series air(31);
  air[0] = 1;
  for (std::size_t n = 3; n <= 30; ++n) air[n] = air[n - 3] / Rat(static_cast<long>(n * (n - 1)));
  auto r = apply(op("D^2 - z"), at_zero(air));
  CHECK(r.is_zero());
  CHECK(r.precision() >= 28);

  PuiseuxLogSeries e(Expansion::AtInfinity, 31);
  for (long n = 0; n < 30; ++n) e.add(-n - 1, 0, n % 2 ? Rat(-factorial(n)) : Rat(factorial(n)));
  CHECK(apply(op("z*D^2 + (1-z)*D - 1"), e).is_zero());

  PuiseuxLogSeries h(Expansion::AtZero, 10);
  h.add(q(1, 2), 1, 1);
  auto th = apply(op("T"), h);
  CHECK(th.coeff(q(1, 2), 1) == SeedCombo(q(1, 2)));
  CHECK(th.coeff(q(1, 2), 0) == SeedCombo(1));
  CHECK(th.terms().size() == 2);
}

TEST_CASE("apply is a ring action") {
  cli::Rng rng(8);
  Series s(25);
  for (auto& c : s) c = cli::random_rat(rng);
  auto y = at_zero(s);
  for (int t = 0; t < 30; ++t) {
    DiffOp a = cli::random_diffop(rng, 2, 2), b = cli::random_diffop(rng, 2, 2);
    auto lhs = apply(a * b, y), rhs = apply(a, apply(b, y));
    Rat p = std::min(lhs.precision(), rhs.precision());
    CHECK(lhs.with_precision(p) == rhs.with_precision(p));
  }
}

TEST_CASE("difference operators") {
  CHECK(DifferenceOp::delta() * DifferenceOp::x() ==
        DifferenceOp({poly({1}), poly({1, 1})}));
  CHECK(DifferenceOp::x() * DifferenceOp::delta() == DifferenceOp({Poly(), poly({0, 1})}));
  DifferenceOp a({poly({1, 2}), poly({0, 0, 3})});
  CHECK(a * DifferenceOp(Poly(1)) == a);
}
