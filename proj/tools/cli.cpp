#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>

#include "gevrey/parser.hpp"
#include "gevrey/theta.hpp"
#include "report.hpp"
#include "selftest.hpp"
#include "suites.hpp"

namespace gevrey::cli {

namespace {

struct Context {
  std::size_t truncate = 50;
  unsigned long prime = 0;
  std::string order;
  std::string format = "json";
  bool strict = false;

  json inputs = json::object();
  json warnings = json::array();
  bool deficient = false;

  void flag(const std::string& w) {
    warnings.push_back(w);
    deficient = true;
  }
};

// Position-annotated message with a caret under the offending character.
[[noreturn]] void rethrow_parse(const std::string& label, const std::string& text, const ParseError& e) {
  throw Error(label + ": " + e.what() + "\n  " + text + "\n  " + std::string(e.position(), ' ') + "^");
}

DiffOp op_arg(Context& ctx, const std::string& label, const std::string& text) {
  try {
    DiffOp op = parse_diffop(text);
    ctx.inputs[label] = to_string(op);
    return op;
  } catch (const ParseError& e) {
    rethrow_parse(label, text, e);
  }
}

Recurrence rec_arg(Context& ctx, const std::string& label, const std::string& text) {
  try {
    Recurrence r = parse_recurrence(text);
    ctx.inputs[label] = to_string(r);
    return r;
  } catch (const ParseError& e) {
    rethrow_parse(label, text, e);
  }
}

Rat rat_arg(Context& ctx, const std::string& label, const std::string& text) {
  Rat r = rat_from_string(text);
  ctx.inputs[label] = to_string(r);
  return r;
}

std::vector<Rat> seq_arg(Context& ctx, const std::string& label, const std::string& text) {
  auto v = parse_rational_sequence(text);
  ctx.inputs[label] = to_json(v);
  return v;
}

Point point_arg(Context& ctx, const std::string& text) {
  if (text == "inf" || text == "infinity") {
    ctx.inputs["at"] = "infinity";
    return AtInfinity{};
  }
  return rat_arg(ctx, "at", text);
}

Rat order_flag(Context& ctx, bool required) {
  if (ctx.order.empty()) {
    if (required) throw Error("--order is required");
    return 0;
  }
  return rat_arg(ctx, "order", ctx.order);
}

json basis_result(Context& ctx, const DiffOp& op, const FormalSolutionBasis& b) {
  json j = to_json(b, &op);
  if (b.deficient) ctx.flag("basis deficient: " + std::to_string(b.solutions.size()) + " of " + std::to_string(b.expected));
  if (!j["all_apply_zero"].get<bool>()) ctx.flag("a basis member failed the apply check");
  return j;
}

json window_json(const std::vector<Rat>& v) { return to_json(v); }

using Handler = std::function<json(Context&)>;

struct Builder {
  CLI::App& app;
  std::map<CLI::App*, Handler>& handlers;
  std::map<std::string, std::string>& strs;

  std::string& s(const std::string& key) { return strs[key]; }

  CLI::App* add(const std::string& name, const std::string& desc, Handler h) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    handlers[sub] = std::move(h);
    return sub;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx;
  CLI::App app{"Exact computations with E-operators, G-operators and their transforms", "gevrey"};
  app.require_subcommand(1);
  app.add_option("--truncate", ctx.truncate, "Series truncation and window length")->capture_default_str();
  app.add_option("--prime", ctx.prime, "Prime for p-curvature");
  app.add_option("--order", ctx.order, "Rational order s");
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--strict", ctx.strict, "Exit 1 when deficiency flags are raised");

  std::map<CLI::App*, Handler> handlers;
  std::map<std::string, std::string> strs;
  Builder b{app, handlers, strs};
  bool symmetrized = false, reverse = false;
  unsigned u = 1, v = 0;
  int K = 0, M = 5;
  std::uint64_t seed = 0;
  int trials = 50;

  auto op1 = [&](CLI::App* sub) { sub->add_option("operator", b.s("op"), "Operator in z and D (or T)")->required(); };
  auto op2 = [&](CLI::App* sub) {
    sub->add_option("a", b.s("a"), "First operator")->required();
    sub->add_option("b", b.s("b"), "Second operator")->required();
  };

  auto* fl = b.add("fl", "Fourier-Laplace transform z -> -D, D -> z", [&](Context& c) {
    DiffOp op = op_arg(c, "operator", b.s("op"));
    DiffOp r = fourier_laplace(op, symmetrized);
    return json{{"transform", to_string(r)}, {"normalized", to_string(normalized(r))}, {"symmetrized", symmetrized}};
  });
  op1(fl);
  fl->add_flag("--symmetrized", symmetrized, "Compose with z -> -z, D -> -D");

  op1(b.add("adjoint", "Formal adjoint", [&](Context& c) {
    return json{{"adjoint", to_string(adjoint(op_arg(c, "operator", b.s("op"))))}};
  }));

  op2(b.add("lclm", "Least common left multiple", [&](Context& c) {
    DiffOp l = lclm(op_arg(c, "a", b.s("a")), op_arg(c, "b", b.s("b")));
    return json{{"lclm", to_string(l)}};
  }));

  op2(b.add("divide", "Right division a = q b + r over Q(z)", [&](Context& c) {
    auto d = right_divide(op_arg(c, "a", b.s("a")), op_arg(c, "b", b.s("b")));
    return json{{"quotient", to_string(d.quotient)}, {"remainder", to_string(d.remainder)}};
  }));

  auto* ram = b.add("ramify", "Substitute z -> z^u", [&](Context& c) {
    c.inputs["u"] = u;
    return json{{"operator", to_string(ramify(op_arg(c, "operator", b.s("op")), u))}};
  });
  op1(ram);
  ram->add_option("u", u, "Exponent")->required()->check(CLI::PositiveNumber);

  auto* des = b.add("descend", "Section y(z^{1/u}) when y(z) is a series in z^u", [&](Context& c) {
    c.inputs["u"] = u;
    return json{{"operator", to_string(descend(op_arg(c, "operator", b.s("op")), u))}};
  });
  op1(des);
  des->add_option("u", u, "Exponent")->required()->check(CLI::PositiveNumber);

  op1(b.add("invert", "Substitute z -> 1/z", [&](Context& c) {
    return json{{"operator", to_string(invert(op_arg(c, "operator", b.s("op"))))}};
  }));

  auto* tw = b.add("twist", "Substitute D -> D - zeta (conjugation by e^{-zeta z})", [&](Context& c) {
    DiffOp op = op_arg(c, "operator", b.s("op"));
    return json{{"operator", to_string(twist_exp(op, rat_arg(c, "zeta", b.s("zeta"))))}};
  });
  op1(tw);
  tw->add_option("zeta", b.s("zeta"), "Rational zeta")->required();

  op1(b.add("polygon", "Newton polygon", [&](Context& c) {
    auto n = polygon(op_arg(c, "operator", b.s("op")));
    json j = to_json(n);
    j["text"] = to_string(n);
    return j;
  }));

  op1(b.add("singularities", "Classify finite singularities and infinity", [&](Context& c) {
    DiffOp op = op_arg(c, "operator", b.s("op"));
    json j = to_json(singularities(op));
    j["e_shape"] = to_json(is_E_shape(op));
    return j;
  }));

  auto* ex = b.add("exponents", "Indicial polynomial and exponents at a point", [&](Context& c) {
    DiffOp op = op_arg(c, "operator", b.s("op"));
    std::string at = b.s("at").empty() ? "0" : b.s("at");
    Point p = point_arg(c, at);
    json j = to_json(exponents(op, p));
    j["indicial"] = to_string(indicial_polynomial(op, p), "X");
    return j;
  });
  op1(ex);
  ex->add_option("--at", b.s("at"), "Rational point or 'inf' (default 0)");

  auto* fr = b.add("frobenius", "Frobenius basis at a rational point", [&](Context& c) {
    DiffOp op = op_arg(c, "operator", b.s("op"));
    Rat at = b.s("at").empty() ? Rat(0) : rat_arg(c, "at", b.s("at"));
    return basis_result(c, op, frobenius_basis(op, at, c.truncate));
  });
  op1(fr);
  fr->add_option("--at", b.s("at"), "Rational point (default 0)");

  op1(b.add("infinity-basis", "Formal solutions at infinity for slopes in {0, 1}", [&](Context& c) {
    DiffOp op = op_arg(c, "operator", b.s("op"));
    return basis_result(c, op, infinity_basis(op, c.truncate));
  }));

  op1(b.add("pcurvature", "p-curvature matrix and nilpotence", [&](Context& c) {
    DiffOp op = op_arg(c, "operator", b.s("op"));
    if (c.prime == 0) throw Error("--prime is required");
    c.inputs["prime"] = c.prime;
    return to_json(p_curvature(op, c.prime));
  }));

  op1(b.add("duality-check", "Exponents at 0 and at the transform's singularities", [&](Context& c) {
    auto d = duality_exponent_check(op_arg(c, "operator", b.s("op")), c.truncate);
    if (!d.ok()) c.flag("duality check failed");
    return to_json(d);
  }));

  op1(b.add("to-recurrence", "Recurrence on the Taylor coefficients", [&](Context& c) {
    return json{{"recurrence", to_string(operator_to_recurrence(op_arg(c, "operator", b.s("op"))))}};
  }));

  auto rec1 = [&](CLI::App* sub) { sub->add_option("recurrence", b.s("rec"), "Recurrence in a(n+i)")->required(); };
  auto inits_opt = [&](CLI::App* sub) { sub->add_option("--inits", b.s("inits"), "Initial terms a(0), a(1), ..."); };

  auto* to_op = b.add("to-operator", "Operator for the generating series", [&](Context& c) {
    Recurrence r = rec_arg(c, "recurrence", b.s("rec"));
    if (b.s("inits").empty()) {
      c.warnings.push_back("natural mode: annihilates the series up to a polynomial of degree < order");
      return json{{"operator", to_string(recurrence_to_operator(r))}};
    }
    return json{{"operator", to_string(recurrence_to_operator(r, seq_arg(c, "inits", b.s("inits"))))}};
  });
  rec1(to_op);
  inits_opt(to_op);

  auto* gen = b.add("generate", "Terms a(0..N) from a recurrence", [&](Context& c) {
    Recurrence r = rec_arg(c, "recurrence", b.s("rec"));
    auto w = generate(r, seq_arg(c, "inits", b.s("inits")), c.truncate);
    return json{{"terms", window_json(w.terms)}, {"provenance", w.provenance}};
  });
  rec1(gen);
  gen->add_option("--inits", b.s("inits"), "Initial terms")->required();

  auto* sec = b.add("section", "Recurrence for n -> a(u n + v)", [&](Context& c) {
    Recurrence r = rec_arg(c, "recurrence", b.s("rec"));
    c.inputs["u"] = u;
    c.inputs["v"] = v;
    std::vector<Rat> inits = b.s("inits").empty() ? std::vector<Rat>{} : seq_arg(c, "inits", b.s("inits"));
    auto s = section(r, u, v, inits);
    json j{{"recurrence", to_string(s.recurrence)}};
    if (s.validated) {
      j["validated"] = *s.validated;
      if (!*s.validated) c.flag("section failed validation on the generated window");
    }
    return j;
  });
  rec1(sec);
  sec->add_option("u", u, "Step")->required()->check(CLI::PositiveNumber);
  sec->add_option("v", v, "Offset")->required();
  inits_opt(sec);

  auto* gev = b.add("gevrey", "Condition (G) diagnostics at order s", [&](Context& c) {
    Rat s = order_flag(c, false);
    std::vector<Rat> terms;
    if (!b.s("rec").empty()) {
      Recurrence r = rec_arg(c, "recurrence", b.s("rec"));
      terms = generate(r, seq_arg(c, "inits", b.s("inits")), c.truncate).terms;
    } else if (!b.s("seq").empty()) {
      terms = seq_arg(c, "sequence", b.s("seq"));
    } else {
      throw Error("gevrey needs a sequence or --recurrence with --inits");
    }
    auto g = condition_G_report({terms, "cli"}, s);
    if (!g.bounded()) c.warnings.push_back("not bounded at order " + to_string(s));
    return to_json(g);
  });
  gev->add_option("sequence", b.s("seq"), "Rational terms a(0), a(1), ...");
  gev->add_option("--recurrence", b.s("rec"), "Generate the window from this recurrence");
  inits_opt(gev);

  op1(b.add("galochkin", "Denominators of the reduced operators", [&](Context& c) {
    auto g = galochkin_sequence(op_arg(c, "operator", b.s("op")), c.truncate);
    json d = json::array();
    for (const auto& x : g.denominators) d.push_back(to_string(x));
    json last = json::array();
    for (const auto& x : g.last_coefficients) last.push_back(to_string(x));
    return json{{"denominators", d}, {"rates", to_json(g.rates)}, {"last_coefficients", last}};
  }));

  auto* poch = b.add("pochhammer", "Growth of (a)_n / (b)_n", [&](Context& c) {
    auto g = pochhammer_growth(rat_arg(c, "a", b.s("a")), rat_arg(c, "b", b.s("b")), c.truncate);
    return json{{"values", window_json(g.values)}, {"denominators", to_json(g.denominators)}};
  });
  poch->add_option("a", b.s("a"), "Rational a")->required();
  poch->add_option("b", b.s("b"), "Rational b")->required();

  auto* lap = b.add("laplace", "(z^alpha log^k z)^+ at infinity", [&](Context& c) {
    Rat alpha = rat_arg(c, "alpha", b.s("alpha"));
    c.inputs["k"] = K;
    auto s = laplace_puiseux(alpha, K);
    json j = to_json(s, 64);
    j["text"] = to_string(s);
    return j;
  });
  lap->add_option("alpha", b.s("alpha"), "Rational exponent")->required();
  lap->add_option("k", K, "Log power")->check(CLI::NonNegativeNumber);

  auto* rho = b.add("rho-table", "rho_{m,j} for m in -M..M", [&](Context& c) {
    Rat alpha = rat_arg(c, "alpha", b.s("alpha"));
    c.inputs["K"] = K;
    c.inputs["M"] = M;
    auto t = rho_table(alpha, K, M);
    if (!t.flagged.empty()) c.warnings.push_back("rows stop where alpha + m = 0");
    return to_json(t);
  });
  rho->add_option("alpha", b.s("alpha"), "Rational alpha")->required();
  rho->add_option("K", K, "Log degree")->required()->check(CLI::NonNegativeNumber);
  rho->add_option("M", M, "Row range")->check(CLI::NonNegativeNumber);

  op1(b.add("build-e", "E-operator attached to a G-operator", [&](Context& c) {
    DiffOp e = build_E_operator(op_arg(c, "operator", b.s("op")));
    return json{{"operator", to_string(e)}, {"e_shape", to_json(is_E_shape(e))}};
  }));

  op1(b.add("recalibrate", "Operator for y(z^{-s}), s from --order", [&](Context& c) {
    DiffOp op = op_arg(c, "operator", b.s("op"));
    DiffOp r = recalibrate(op, order_flag(c, true));
    return json{{"operator", to_string(r)}, {"e_shape", to_json(is_E_shape(r))}};
  }));

  auto* mop = b.add("mellin-op", "Mellin image of a difference operator, or the inverse", [&](Context& c) {
    ParsedOperator p;
    try {
      p = parse_operator(b.s("op"));
    } catch (const ParseError& e) {
      rethrow_parse("operator", b.s("op"), e);
    }
    c.inputs["operator"] = serialize(p);
    if (auto* d = std::get_if<DifferenceOp>(&p)) return json{{"operator", to_string(mellin_operator(*d))}};
    DiffOp op = std::holds_alternative<DiffOp>(p) ? std::get<DiffOp>(p) : to_diffop(std::get<ThetaOp>(p));
    return json{{"difference_operator", to_string(inverse_mellin_operator(op))}};
  });
  mop->add_option("operator", b.s("op"), "Operator in x and Delta, or in z and D")->required();

  auto* ms = b.add("mellin-series", "Formal Mellin transform of a factorial series", [&](Context& c) {
    FactorialSeries g{rat_arg(c, "rho", b.s("rho")), seq_arg(c, "b", b.s("b"))};
    if (g.degenerate()) c.warnings.push_back("rho is a negative integer: the map is not injective here");
    auto s = mellin_series(g);
    json j = to_json(s, 64);
    j["text"] = to_string(s);
    return j;
  });
  ms->add_option("rho", b.s("rho"), "Rational rho")->required();
  ms->add_option("b", b.s("b"), "Coefficients b_0, b_1, ...")->required();

  auto* nic = b.add("nicole", "Factorial-series coefficients to asymptotic coefficients", [&](Context& c) {
    auto in = seq_arg(c, reverse ? "a" : "b", b.s("seq"));
    std::size_t N = std::min(c.truncate, in.size());
    if (reverse) return json{{"b", window_json(nicole_reverse(in, N).b)}};
    return json{{"a", window_json(nicole_convert({0, in}, N))}};
  });
  nic->add_option("sequence", b.s("seq"), "Coefficients")->required();
  nic->add_flag("--reverse", reverse, "Asymptotic coefficients to factorial-series coefficients");

  auto* su = b.add("suite", "Bundled example pipelines", [&](Context& c) {
    std::string name = b.s("suite");
    c.inputs["suite"] = name;
    std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
    json j = json::object();
    for (const auto& n : names) {
      auto r = run_suite(n, c.truncate);
      r.report["ok"] = r.ok;
      if (!r.ok) c.flag("suite " + n + " has failing checks");
      if (r.deficient) c.flag("suite " + n + " has a deficient basis");
      j[n] = r.report;
    }
    return names.size() == 1 ? j[names[0]] : j;
  });
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  su->add_option("name", b.s("suite"), "Suite name")->required()->check(CLI::IsMember(suite_choices));

  auto* st = b.add("selftest", "Randomized algebraic properties", [&](Context& c) {
    c.inputs["seed"] = seed;
    c.inputs["trials"] = trials;
    auto r = selftest(seed, trials);
    for (const auto& p : r)
      if (p.failures) c.flag("property " + p.name + " failed " + std::to_string(p.failures) + " times");
    return json{{"properties", to_json(r)}};
  });
  st->add_option("--seed", seed, "RNG seed")->required();
  st->add_option("--trials", trials, "Trials per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  json report;
  report["command"] = chosen->get_name();
  json results;
  try {
    results = handlers.at(chosen)(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  report["inputs"] = ctx.inputs;
  report["truncate"] = ctx.truncate;
  report["results"] = results;
  report["warnings"] = ctx.warnings;

  if (ctx.format == "text")
    out << to_text(report);
  else
    out << report.dump(2) << "\n";
  return ctx.strict && ctx.deficient ? 1 : 0;
}

}  // namespace gevrey::cli
