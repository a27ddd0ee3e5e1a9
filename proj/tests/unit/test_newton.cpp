#include "gevrey/newton.hpp"
#include "helpers.hpp"

using namespace gevrey;
using namespace gevrey::test;

TEST_CASE("polygon slopes") {
  auto airy = polygon(op("D^2 - z"));
  CHECK(airy.vertices == std::vector<LatticePoint>{{0, 1}, {2, -2}});
  CHECK(airy.slopes_at_infinity() == std::vector<Rat>{q(3, 2)});

  DiffOp weber = DiffOp::d(2) - DiffOp(poly({q(-1, 2) - q(1, 7), 0, q(1, 4)}));
  CHECK(polygon(weber).slopes_at_infinity() == std::vector<Rat>{2});

  auto fu = polygon(op("z*D"));
  REQUIRE(fu.edges.size() == 2);
  CHECK(fu.top().kind == EdgeKind::MinusZero);
  CHECK(fu.bottom().kind == EdgeKind::PlusZero);
  CHECK(fu.top().length == 1);
}

TEST_CASE("polygon of the Fourier transform") {
  CHECK(fl_polygon_map(polygon(op("D^2 - z"))) == polygon(op("D + z^2")));
  DiffOp e = op("z*D - 1");
  CHECK(fl_polygon_map(polygon(e)) == polygon(fourier_laplace(e, false)));
  CHECK(fl_polygon_map(polygon(op("z"))) == polygon(op("D")));
}

TEST_CASE("polygon map commutes with the transform") {
  cli::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    DiffOp a = cli::random_diffop(rng);
    if (a.is_zero()) continue;
    CHECK(fl_polygon_map(polygon(a)) == polygon(fourier_laplace(a, true)));
  }
}

TEST_CASE("singularities") {
  auto phi = singularities(op("z*D^2 + (1-3*z)*D + 2*z"));
  REQUIRE(phi.finite.size() == 1);
  CHECK(phi.finite[0].roots == std::vector<Rat>{0});
  CHECK(phi.finite[0].classification == PointClass::Regular);
  CHECK(phi.finite[0].exponents.rational == std::vector<RootMultiplicity>{{0, 2}});
  CHECK(phi.infinity.classification == PointClass::Irregular);
  CHECK(phi.infinity.slopes == std::vector<Rat>{1});

  // Oracle: residues of 15z/(4 - 9z^2).
  auto g = singularities(op("(4 - 9*z^2)*D - 15*z"));
  REQUIRE(g.finite.size() == 2);
  for (const auto& s : g.finite) {
    CHECK(s.classification == PointClass::Regular);
    CHECK(s.exponents.rational == std::vector<RootMultiplicity>{{q(-5, 6), 1}});
  }
  CHECK(g.finite[0].roots == std::vector<Rat>{q(-2, 3)});
  CHECK(g.infinity.classification == PointClass::Regular);
  CHECK(g.fuchsian());

  auto airy = singularities(op("D^2 - z"));
  CHECK(airy.finite.empty());
  CHECK(airy.infinity.slopes == std::vector<Rat>{q(3, 2)});
  CHECK_FALSE(airy.fuchsian());
}

TEST_CASE("trivial singularities") {
  auto s = singularities(op("(z-1)*D - z"));
  REQUIRE(s.finite.size() == 1);
  CHECK(s.finite[0].classification == PointClass::Trivial);
  // Basis 1, (z - 1)^2.
  auto t = singularities(op("(z-1)*D^2 - D"));
  REQUIRE(t.finite.size() == 1);
  CHECK(t.finite[0].classification == PointClass::Trivial);
}

TEST_CASE("irrational singularities are reported by factor") {
  auto s = singularities(op("(z^2 - 2)*D - 1"));
  REQUIRE(s.finite.size() == 1);
  CHECK(s.finite[0].factor == poly({-2, 0, 1}));
  CHECK(s.finite[0].roots.empty());
  CHECK(s.finite[0].classification == PointClass::Regular);
}

TEST_CASE("indicial polynomials") {
  CHECK(indicial_polynomial(op("9*z*D^2 + 3*D - 4*z"), Rat(0)) == poly({0, -6, 9}));
  CHECK(indicial_polynomial(op("(z-1)*D - z"), Rat(1)) == poly({-1, 1}));
  CHECK(indicial_polynomial(op("T - 5"), Rat(0)) == poly({-5, 1}));
  // 1/z at infinity: exponent 1 in the local variable 1/z.
  auto e = exponents(op("z*D + 1"), AtInfinity{});
  CHECK(e.rational == std::vector<RootMultiplicity>{{1, 1}});
}

TEST_CASE("E-shape") {
  CHECK(is_E_shape(op("z*D^2 + (1-3*z)*D + 2*z")).ok());
  CHECK_FALSE(is_E_shape(op("D^2 - z")).ok());
  CHECK(is_E_shape(op("9*z*D^2 + 3*D - 4*z")).ok());
  auto r = is_E_shape(op("(z-1)*D - 1"));
  CHECK_FALSE(r.finite_only_zero);
}

TEST_CASE("G-operators of the examples are fuchsian with rational exponents") {
  for (const char* s : {"(4 - 9*z^2)*D - 15*z", "(2*z-1)*(1-z)*D - 2*z", "(1-z)*D - 1", "z*((1+z)*D + 1)",
                        "(z-1/2)*(z+1/2)*D^2 + (4*z+2)*D + 77/36"}) {
    auto r = singularities(op(s));
    CHECK(r.fuchsian());
    for (const auto& f : r.finite) CHECK(f.exponents.remainder == Poly(1));
    CHECK(r.infinity.exponents.remainder == Poly(1));
  }
}
