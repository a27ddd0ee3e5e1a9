#include "gevrey/mellin.hpp"
#include "gevrey/newton.hpp"
#include "helpers.hpp"

using namespace gevrey;
using namespace gevrey::test;

namespace {

const DifferenceOp X = DifferenceOp::x();
const DifferenceOp Delta = DifferenceOp::delta();

// 1/x^2 at rho = 0 and rho = 1; both Mellin series are -log z.
FactorialSeries inverse_square(int rho, std::size_t N) {
  FactorialSeries g{rho, {}};
  for (std::size_t n = 0; n <= N; ++n)
    g.b.push_back(rho == 0 ? (n == 0 ? Rat(0) : Rat(factorial(n - 1))) : Rat(factorial(n)));
  return g;
}

// (x+1)^2 g(x+1) = x^2 g(x)
DifferenceOp inverse_square_op() {
  DifferenceOp x1 = X + DifferenceOp(Poly(1));
  return x1 * x1 * Delta + X * Rat(2) + DifferenceOp(Poly(1));
}

}  // namespace

TEST_CASE("Mellin images of the generators") {
  CHECK(mellin_operator(X) == op("-z*D"));
  CHECK(mellin_operator(Delta) == op("z - 1"));
  DiffOp zm1 = op("z - 1"), mzd = op("-z*D");
  CHECK(mellin_operator(Delta * X - X * Delta) == op("z"));
  CHECK(mellin_operator(Delta * X - X * Delta) == zm1 * mzd - mzd * zm1);
  CHECK(mellin_operator(Delta + DifferenceOp(Poly(1))) == op("z"));
  // Oracle: tests/oracles/derive.py (mellin_xDelta+1).
  CHECK(normalized(mellin_operator(X * Delta + DifferenceOp(Poly(1)))) == nop("(z - z^2)*D + 1 - z"));
}

TEST_CASE("Mellin map is a ring isomorphism") {
  cli::Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    DifferenceOp a = cli::random_difference_op(rng), b = cli::random_difference_op(rng);
    CHECK(mellin_operator(a * b) == mellin_operator(a) * mellin_operator(b));
    CHECK(inverse_mellin_operator(mellin_operator(a)) == a);
    CHECK(inverse_mellin_operator(mellin_operator(a * b)) == a * b);
  }
  CHECK_THROWS_AS(inverse_mellin_operator(op("D")), Error);
}

TEST_CASE("Mellin series") {
  auto one = mellin_series({0, {1, 0, 0}});
  CHECK(one.coeff(0) == SeedCombo(1));
  CHECK(one.terms().size() == 1);

  auto lin = mellin_series({0, {0, 1, 0}});
  CHECK(lin.coeff(1) == SeedCombo(1));
  CHECK(lin.terms().size() == 1);

  auto half = mellin_series({q(1, 2), {1}});
  CHECK(half.coeff(q(1, 2)) == inverse_gamma_value(q(3, 2)));

  FactorialSeries deg{-2, {1}};
  CHECK(deg.degenerate());
  CHECK_FALSE(FactorialSeries{q(-1, 2), {1}}.degenerate());
}

TEST_CASE("Nicole conversion") {
  std::vector<Rat> inv{1, 0, 0, 0, 0, 0};
  CHECK(nicole_convert({0, inv}, 6) == inv);

  // Oracle: tests/oracles/derive.py (nicole_b01).
  auto a = nicole_convert({0, {0, 1, 0, 0, 0, 0}}, 6);
  CHECK(a == std::vector<Rat>{0, 1, -1, 1, -1, 1});

  cli::Rng rng(72);
  for (int t = 0; t < 30; ++t) {
    FactorialSeries g{0, {}};
    for (int n = 0; n < 14; ++n) g.b.push_back(cli::random_rat(rng));
    CHECK(nicole_reverse(nicole_convert(g, 14), 14).b == g.b);
  }
  CHECK_THROWS_AS(nicole_convert({q(1, 2), {1, 2}}, 2), Error);

  // 1/x^2 = x^{-2}: a = (0, 1, 0, ...), b_n = (n - 1)!.
  std::vector<Rat> sq(12);
  sq[1] = 1;
  CHECK(nicole_reverse(sq, 12).b == inverse_square(0, 11).b);
}

TEST_CASE("factorial Gevrey checks") {
  FactorialSeries fact{0, {}}, ones{0, {}};
  for (std::size_t n = 0; n <= 60; ++n) {
    fact.b.push_back(Rat(factorial(n)));
    ones.b.push_back(1);
  }
  CHECK(factorial_gevrey_check(fact, 0).bounded());
  CHECK(factorial_gevrey_check(ones, -1).bounded());
  FactorialSeries sq{0, {}};
  for (std::size_t n = 0; n <= 60; ++n) sq.b.push_back(Rat(factorial(n) * factorial(n)));
  CHECK_FALSE(factorial_gevrey_check(sq, 0).bounded());
}

TEST_CASE("factorial-series solutions at shifted rho agree") {
  DiffOp phi = mellin_operator(inverse_square_op());
  CHECK(singularities(phi).fuchsian());
  for (int rho : {0, 1}) {
    auto g = inverse_square(rho, 60);
    CHECK(apply(phi, mellin_series({g.rho, std::vector<Rat>(g.b.begin(), g.b.begin() + 20)})).is_zero());
  }
  CHECK(mellin_series(inverse_square(0, 15)).with_precision(15) == mellin_series(inverse_square(1, 15)).with_precision(15));
  auto v0 = factorial_gevrey_check(inverse_square(0, 60), 0);
  auto v1 = factorial_gevrey_check(inverse_square(1, 60), 0);
  CHECK(v0.bounded());
  CHECK(v0.bounded() == v1.bounded());
}
