#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gevrey::cli {

json to_json(const Rat& r) { return to_string(r); }

json to_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

json to_json(const SeedCombo& c) { return to_string(c); }

namespace {

json point(const LatticePoint& p) { return json::array({p.u, p.v}); }

const char* kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::MinusZero: return "-0";
    case EdgeKind::PlusZero: return "+0";
    default: return "sloped";
  }
}

json doubles(const std::vector<double>& v) {
  json a = json::array();
  for (std::size_t n = 1; n < v.size(); ++n) a.push_back(std::isfinite(v[n]) ? json(v[n]) : json(nullptr));
  return a;
}

json point_json(const Point& p) { return to_string(p); }

}  // namespace

json to_json(const NewtonPolygon& n) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : n.vertices) j["vertices"].push_back(point(v));
  j["edges"] = json::array();
  for (const auto& e : n.edges)
    j["edges"].push_back({{"kind", kind_name(e.kind)},
                          {"slope", to_string(e.slope)},
                          {"length", e.length},
                          {"from", point(e.from)},
                          {"to", point(e.to)}});
  j["slopes_at_infinity"] = to_json(n.slopes_at_infinity());
  j["slopes_at_zero"] = to_json(n.slopes_at_zero());
  return j;
}

json to_json(const Exponents& e) {
  json j;
  j["rational"] = json::array();
  for (const auto& r : e.rational)
    j["rational"].push_back({{"root", to_string(r.root)}, {"multiplicity", r.multiplicity}});
  j["remainder"] = to_string(e.remainder, "X");
  return j;
}

json to_json(const SingularityReport& s) {
  json j;
  j["finite"] = json::array();
  for (const auto& f : s.finite) {
    json fj{{"factor", to_string(f.factor)},
            {"roots", to_json(f.roots)},
            {"class", to_string(f.classification)},
            {"slopes", to_json(f.slopes)}};
    if (f.classification != PointClass::Irregular && !f.roots.empty()) fj["exponents"] = to_json(f.exponents);
    j["finite"].push_back(fj);
  }
  j["infinity"] = {{"class", to_string(s.infinity.classification)},
                   {"slopes", to_json(s.infinity.slopes)},
                   {"exponents", to_json(s.infinity.exponents)}};
  j["fuchsian"] = s.fuchsian();
  return j;
}

json to_json(const EShapeReport& e) {
  return {{"ok", e.ok()},
          {"finite_only_zero", e.finite_only_zero},
          {"zero_regular_rational", e.zero_regular_rational},
          {"infinity_slopes_ok", e.infinity_slopes_ok},
          {"reasons", e.reasons}};
}

json to_json(const PuiseuxLogSeries& s, std::size_t max_terms) {
  json j;
  j["expansion"] = s.expansion() == Expansion::AtZero ? "finite" : "infinity";
  j["center"] = to_string(s.center());
  j["orientation"] = s.orientation();
  j["precision"] = to_string(s.precision());
  j["term_count"] = s.terms().size();
  j["terms"] = json::array();
  std::size_t k = 0;
  // Terms by increasing depth.
  std::vector<std::pair<PuiseuxLogSeries::Key, SeedCombo>> ordered(s.terms().begin(), s.terms().end());
  if (s.expansion() == Expansion::AtInfinity) std::reverse(ordered.begin(), ordered.end());
  for (const auto& [key, c] : ordered) {
    if (k++ >= max_terms) break;
    j["terms"].push_back({{"exponent", to_string(key.exponent)}, {"log", key.log_power}, {"coeff", to_string(c)}});
  }
  return j;
}

bool apply_zero(const DiffOp& op, const PuiseuxLogSeries& s) { return apply(op, s).is_zero(); }

bool all_apply_zero(const DiffOp& op, const FormalSolutionBasis& b) {
  for (const auto& f : b.solutions) {
    const DiffOp& o = std::holds_alternative<AtInfinity>(b.at) ? part_operator(op, f.zeta) : op;
    if (!apply_zero(o, f.series)) return false;
  }
  return true;
}

json to_json(const FormalSolutionBasis& b, const DiffOp* op) {
  json j;
  j["at"] = point_json(b.at);
  j["expected"] = b.expected;
  j["found"] = b.solutions.size();
  j["deficient"] = b.deficient;
  j["notes"] = b.notes;
  j["solutions"] = json::array();
  bool at_inf = std::holds_alternative<AtInfinity>(b.at);
  for (const auto& f : b.solutions) {
    json s{{"alpha", to_string(f.alpha)}, {"log_degree", f.log_degree}, {"series", to_json(f.series, 6)}};
    if (at_inf) s["zeta"] = to_string(f.zeta);
    if (op) s["apply_zero"] = apply_zero(at_inf ? part_operator(*op, f.zeta) : *op, f.series);
    j["solutions"].push_back(s);
  }
  if (op) j["all_apply_zero"] = all_apply_zero(*op, b);
  return j;
}

json to_json(const DualityReport& d) {
  json j;
  j["ok"] = d.ok();
  j["notes"] = d.notes;
  j["pairs"] = json::array();
  for (const auto& p : d.pairs)
    j["pairs"].push_back({{"label", p.label}, {"left", to_json(p.left)}, {"right", to_json(p.right)}, {"equal", p.equal}});
  return j;
}

json to_json(const PCurvatureReport& p) {
  json j;
  j["p"] = p.p;
  j["zero"] = p.zero();
  j["nilpotent"] = p.nilpotent;
  j["nilpotency_index"] = p.nilpotency_index;
  j["matrix"] = json::array();
  for (const auto& row : p.matrix) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    j["matrix"].push_back(r);
  }
  return j;
}

json to_json(const GevreyReport& g) {
  return {{"s", to_string(g.s)},
          {"window", g.window},
          {"tail_start", g.tail_start},
          {"order_estimate", g.order_estimate},
          {"order_snapped", to_string(g.order_snapped)},
          {"denominator_tail_max", g.denominator_tail_max},
          {"magnitude_tail_max", g.magnitude_tail_max},
          {"denominator_slope", g.denominator_slope},
          {"magnitude_slope", g.magnitude_slope},
          {"denominator_constant", g.denominator_constant},
          {"magnitude_constant", g.magnitude_constant},
          {"denominators_bounded", g.denominators_bounded},
          {"magnitudes_bounded", g.magnitudes_bounded},
          {"bounded", g.bounded()},
          {"denominator_rates", doubles(g.denominator_rates)},
          {"magnitude_rates", doubles(g.magnitude_rates)}};
}

json to_json(const RateSummary& r) {
  return {{"rates", doubles(r.rates)},
          {"tail_start", r.tail_start},
          {"tail_max", r.tail_max},
          {"slope", r.slope},
          {"bounded", r.bounded}};
}

json to_json(const RhoTable& t) {
  json j;
  j["alpha"] = to_string(t.alpha);
  j["K"] = t.K;
  j["flagged"] = t.flagged;
  j["rows"] = json::object();
  for (const auto& [m, row] : t.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    j["rows"][std::to_string(m)] = r;
  }
  return j;
}

namespace {

void text_rec(const json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = *it;
    std::string key = j.is_object() ? it.key() : "-";
    bool scalar_list = v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
    if (v.is_primitive()) {
      os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (scalar_list) {
      os << indent << key << ": [";
      bool first = true;
      for (const auto& e : v) {
        os << (first ? "" : ", ") << (e.is_string() ? e.get<std::string>() : e.dump());
        first = false;
      }
      os << "]\n";
    } else {
      os << indent << key << ":\n";
      text_rec(v, indent + "  ", os);
    }
  }
}

}  // namespace

std::string to_text(const json& j) {
  std::ostringstream os;
  if (j.is_primitive())
    os << j.dump() << "\n";
  else
    text_rec(j, "", os);
  return os.str();
}

}  // namespace gevrey::cli
