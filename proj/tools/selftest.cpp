#include "selftest.hpp"

#include <functional>

#include "gevrey/arith.hpp"
#include "gevrey/parser.hpp"
#include "random_ops.hpp"

namespace gevrey::cli {

namespace {

using Check = std::function<std::optional<std::string>(Rng&)>;

PropertyResult run(const std::string& name, int trials, Rng& rng, const Check& check) {
  PropertyResult r{name, trials, 0, {}};
  for (int t = 0; t < trials; ++t) {
    auto bad = check(rng);
    if (!bad) continue;
    if (r.failures++ == 0) r.counterexample = *bad;
  }
  return r;
}

DiffOp nonconstant(Rng& rng) {
  DiffOp op;
  while (op.order() < 1) op = random_diffop(rng);
  return op;
}

}  // namespace

std::vector<PropertyResult> selftest(std::uint64_t seed, int trials) {
  Rng rng(seed);
  std::vector<PropertyResult> out;

  out.push_back(run("serialize_parse_roundtrip", trials, rng, [](Rng& g) -> std::optional<std::string> {
    DiffOp op = random_diffop(g);
    if (parse_diffop_exact(to_string(op)) == op) return std::nullopt;
    return to_string(op);
  }));

  out.push_back(run("fl_polygon_map_commutes", trials, rng, [](Rng& g) -> std::optional<std::string> {
    DiffOp op = random_diffop(g);
    if (op.is_zero()) return std::nullopt;
    if (fl_polygon_map(polygon(op)) == polygon(fourier_laplace(op, false))) return std::nullopt;
    return to_string(op);
  }));

  out.push_back(run("fl_multiplicative", trials, rng, [](Rng& g) -> std::optional<std::string> {
    DiffOp a = random_diffop(g, 2, 2), b = random_diffop(g, 2, 2);
    for (bool sym : {false, true})
      if (fourier_laplace(a * b, sym) != fourier_laplace(a, sym) * fourier_laplace(b, sym))
        return to_string(a) + " ; " + to_string(b);
    return std::nullopt;
  }));

  out.push_back(run("adjoint_involution_antimultiplicative", trials, rng, [](Rng& g) -> std::optional<std::string> {
    DiffOp a = random_diffop(g, 2, 2), b = random_diffop(g, 2, 2);
    if (adjoint(adjoint(a)) != a || adjoint(a * b) != adjoint(b) * adjoint(a))
      return to_string(a) + " ; " + to_string(b);
    return std::nullopt;
  }));

  out.push_back(run("lclm_right_divisible", trials, rng, [](Rng& g) -> std::optional<std::string> {
    DiffOp a = nonconstant(g), b = nonconstant(g);
    DiffOp l = lclm(a, b);
    if (right_divide(l, a).remainder.is_zero() && right_divide(l, b).remainder.is_zero()) return std::nullopt;
    return to_string(a) + " ; " + to_string(b);
  }));

  out.push_back(run("operator_recurrence_roundtrip", trials, rng, [](Rng& g) -> std::optional<std::string> {
    Recurrence r = random_recurrence(g);
    if (operator_to_recurrence(recurrence_to_operator(r)) == r) return std::nullopt;
    return to_string(r);
  }));

  out.push_back(run("mellin_isomorphism", trials, rng, [](Rng& g) -> std::optional<std::string> {
    DifferenceOp a = random_difference_op(g), b = random_difference_op(g);
    DiffOp ma = mellin_operator(a), mb = mellin_operator(b);
    if (mellin_operator(a * b) != ma * mb) return "product: " + to_string(a) + " ; " + to_string(b);
    if (inverse_mellin_operator(ma) != a) return "inverse: " + to_string(a);
    return std::nullopt;
  }));

  out.push_back(run("laplace_inverse_roundtrip", trials, rng, [](Rng& g) -> std::optional<std::string> {
    PuiseuxLogSeries y(Expansion::AtZero, 8);
    Rat alpha = rat(uniform(g, -7, 7), 3);
    if (is_integer(alpha)) alpha += Rat(1, 2);
    for (int n = 0; n < 4; ++n)
      for (int k = 0; k <= 1; ++k)
        if (uniform(g, 0, 1)) y.add(alpha + n, k, random_rat(g));
    if (y.is_zero()) return std::nullopt;
    auto back = laplace_inverse(laplace_full(y));
    for (const auto& [key, c] : y.terms())
      if (back.coeff(key.exponent, key.log_power) != c) return to_string(y);
    if (back.terms().size() != y.terms().size()) return to_string(y);
    return std::nullopt;
  }));

  out.push_back(run("partie_finie_sum", trials, rng, [](Rng& g) -> std::optional<std::string> {
    Rat alpha = random_rat(g, 20, 7);
    auto n = static_cast<unsigned>(uniform(g, 0, 20));
    if (is_integer(alpha) && alpha <= -1 && -alpha - 1 <= n) return std::nullopt;
    if (partie_finie_sum(alpha, n) == Rat(1) / pochhammer(alpha + 1, n + 1)) return std::nullopt;
    return to_string(alpha) + ", " + std::to_string(n);
  }));

  out.push_back(run("nicole_roundtrip", trials, rng, [](Rng& g) -> std::optional<std::string> {
    FactorialSeries f{0, {}};
    for (int n = 0; n < 12; ++n) f.b.push_back(random_rat(g));
    auto a = nicole_convert(f, 12);
    if (nicole_reverse(a, 12).b == f.b) return std::nullopt;
    return "b window of length 12";
  }));
  return out;
}

json to_json(const std::vector<PropertyResult>& r) {
  json a = json::array();
  for (const auto& p : r) {
    json j{{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}};
    if (p.failures) j["counterexample"] = p.counterexample;
    a.push_back(j);
  }
  return a;
}

}  // namespace gevrey::cli
