#include "suites.hpp"

#include "gevrey/parser.hpp"
#include "gevrey/theta.hpp"

namespace gevrey::cli {

DiffOp airy_operator() { return parse_diffop_exact("D^2 - z"); }

DiffOp weber_operator(const Rat& m) {
  return DiffOp::d(2) - DiffOp(Poly(std::vector<Rat>{Rat(-1, 2) - m, 0, Rat(1, 4)}));
}

DiffOp whittaker_operator(const Rat& k, const Rat& m) {
  Poly c(std::vector<Rat>{Rat(1, 4) - m * m, k, Rat(-1, 4)});
  return make_diffop({c, Poly(0), Poly::monomial(1, 2)});
}

DiffOp euler_operator() { return parse_diffop_exact("z*D^2 + (1-z)*D - 1"); }
DiffOp intertwine_phi() { return parse_diffop_exact("z*D^2 + (1-3*z)*D + 2*z"); }
DiffOp intertwine_theta() { return parse_diffop_exact("(z-1)*D - z"); }
DiffOp intertwine_g_operator() { return parse_diffop_exact("(2*z-1)*(1-z)*D - 2*z"); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"airy", "weber", "whittaker", "euler", "intertwine"};
  return names;
}

namespace {

struct Checks {
  json items = json::object();
  bool ok = true;
  void add(const std::string& name, bool v) {
    items[name] = v;
    ok = ok && v;
  }
};

struct Bases {
  json report;
  bool full = false;
  bool apply = false;
};

bool full(const FormalSolutionBasis& b) {
  return !b.deficient && static_cast<int>(b.solutions.size()) == b.expected;
}

Bases bases(const DiffOp& base, const DiffOp& e_op, std::size_t N) {
  auto f0 = frobenius_basis(base, 0, N);
  auto inf = infinity_basis(e_op, N);
  Bases b;
  b.report["frobenius_at_0"] = to_json(f0, &base);
  b.report["infinity_basis"] = to_json(inf, &e_op);
  b.full = full(f0) && full(inf);
  b.apply = all_apply_zero(base, f0) && all_apply_zero(e_op, inf);
  return b;
}

SuiteResult finish(const std::string& name, json report, Checks c, const Bases& b) {
  c.add("bases_full", b.full);
  c.add("bases_apply_zero", b.apply);
  report["bases"] = b.report;
  report["checks"] = c.items;
  return {name, std::move(report), c.ok, !b.full};
}

json pcurv_block(const DiffOp& op, Checks& c, const std::string& label) {
  json out = json::object();
  bool all = true;
  for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
    auto r = p_curvature(op, p);
    out[std::to_string(p)] = r.zero();
    all = all && r.zero();
  }
  c.add(label, all);
  return out;
}

SuiteResult airy(std::size_t N) {
  json r;
  Checks c;
  DiffOp base = airy_operator();
  r["operator"] = to_string(base);
  auto poly = polygon(base);
  r["polygon"] = to_json(poly);
  c.add("slope_3/2_at_infinity", poly.slopes_at_infinity() == std::vector<Rat>{Rat(3, 2)});

  DiffOp e = recalibrate(base, Rat(-2, 3));
  r["e_operator"] = to_string(e);
  auto shape = is_E_shape(e);
  r["e_shape"] = to_json(shape);
  c.add("e_shape", shape.ok());
  r["exponents_at_0"] = to_json(exponents(e, Rat(0)));

  DiffOp fl = normalized(fourier_laplace(e, true));
  r["g_operator"] = to_string(fl);
  r["g_singularities"] = to_json(singularities(fl));
  r["pcurvature_zero"] = pcurv_block(fl, c, "pcurvature_zero");

  auto d = duality_exponent_check(e);
  r["duality"] = to_json(d);
  c.add("duality", d.ok());

  auto w = generate(operator_to_recurrence(base), {1, 0, 0}, N);
  auto g = condition_G_report(w, Rat(-2, 3));
  r["gevrey_taylor"] = to_json(g);
  c.add("gevrey_taylor_bounded", g.bounded());
  return finish("airy", std::move(r), c, bases(base, e, N));
}

SuiteResult weber(std::size_t N) {
  json r;
  Checks c;
  DiffOp base = normalized(weber_operator(Rat(1, 7)));
  r["m"] = "1/7";
  r["operator"] = to_string(base);
  auto poly = polygon(base);
  r["polygon"] = to_json(poly);
  c.add("slope_2_at_infinity", poly.slopes_at_infinity() == std::vector<Rat>{Rat(2)});

  DiffOp e = recalibrate(base, Rat(-1, 2));
  r["e_operator"] = to_string(e);
  auto shape = is_E_shape(e);
  r["e_shape"] = to_json(shape);
  c.add("e_shape", shape.ok());
  c.add("e_slope_1", polygon(e).slopes_at_infinity() == std::vector<Rat>{Rat(1)});
  auto d = duality_exponent_check(e);
  r["duality"] = to_json(d);
  c.add("duality", d.ok());
  return finish("weber", std::move(r), c, bases(base, e, N));
}

SuiteResult whittaker(std::size_t N) {
  json r;
  Checks c;
  Rat k(2), m(1, 3);
  DiffOp raw = whittaker_operator(k, m);
  DiffOp base = normalized(raw);
  r["k"] = to_string(k);
  r["m"] = to_string(m);
  r["operator"] = to_string(base);
  DiffOp fl = fourier_laplace(raw, true);
  r["transform"] = to_string(fl);
  c.add("transform_exact", fl == parse_diffop_exact("(z-1/2)*(z+1/2)*D^2 + (4*z+2)*D + 77/36"));
  r["transform_singularities"] = to_json(singularities(fl));
  auto shape = is_E_shape(base);
  r["e_shape"] = to_json(shape);
  c.add("e_shape", shape.ok());
  auto d = duality_exponent_check(base);
  r["duality"] = to_json(d);
  c.add("duality", d.ok());
  return finish("whittaker", std::move(r), c, bases(base, base, N));
}

SuiteResult euler(std::size_t N) {
  json r;
  Checks c;
  DiffOp base = euler_operator();
  r["operator"] = to_string(base);
  DiffOp fl = normalized(fourier_laplace(base, true));
  r["transform"] = to_string(fl);
  c.add("transform_is_z((1+z)D+1)", fl == normalized(parse_diffop_exact("z*((1+z)*D+1)")));

  PuiseuxLogSeries s(Expansion::AtInfinity, Rat(static_cast<long>(N) + 1));
  for (std::size_t n = 0; n < N; ++n) {
    Rat c_n(factorial(n));
    s.add(Rat(-static_cast<long>(n) - 1), 0, n % 2 == 0 ? c_n : Rat(-c_n));
  }
  c.add("annihilates_sum_(-1)^n_n!_z^(-n-1)", apply_zero(base, s));
  auto d = duality_exponent_check(base);
  r["duality"] = to_json(d);
  c.add("duality", d.ok());
  return finish("euler", std::move(r), c, bases(base, base, N));
}

SuiteResult intertwine(std::size_t N) {
  json r;
  Checks c;
  DiffOp phi = intertwine_phi(), theta = intertwine_theta();
  r["phi"] = to_string(phi);
  r["theta"] = to_string(theta);
  c.add("(z-1)Phi=(zD-2z+1)Theta",
        DiffOp(Poly(std::vector<Rat>{-1, 1})) * phi == parse_diffop_exact("z*D - 2*z + 1") * theta);
  DiffOp g = intertwine_g_operator();
  r["g_operator"] = to_string(g);
  DiffOp e = build_E_operator(g);
  r["e_operator"] = to_string(e);
  c.add("build_E_is_Phi", e == normalized(phi));

  // (z - 1) e^z = sum (n - 1) z^n / n!
  Series t(N + 1);
  for (std::size_t n = 0; n <= N; ++n) t[n] = Rat(static_cast<long>(n) - 1) / Rat(factorial(n));
  auto y = PuiseuxLogSeries::from_series(t, Expansion::AtZero);
  c.add("annihilates_(z-1)e^z", apply_zero(phi, y));
  auto d = duality_exponent_check(phi);
  r["duality"] = to_json(d);
  c.add("duality", d.ok());
  return finish("intertwine", std::move(r), c, bases(phi, phi, N));
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::size_t N) {
  if (name == "airy") return airy(N);
  if (name == "weber") return weber(N);
  if (name == "whittaker") return whittaker(N);
  if (name == "euler") return euler(N);
  if (name == "intertwine") return intertwine(N);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace gevrey::cli
