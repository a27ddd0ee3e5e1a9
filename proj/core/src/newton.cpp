#include "gevrey/newton.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gevrey/solutions.hpp"
#include "gevrey/theta.hpp"

namespace gevrey {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long>(a.u - o.u) * (b.v - o.v) - static_cast<long>(a.v - o.v) * (b.u - o.u);
}

// One extreme point per column (max v when upper, min v otherwise) for
// columns at or right of u0, then the monotone chain with collinear points dropped.
std::vector<LatticePoint> chain(const std::vector<LatticePoint>& pts, int u0, bool upper) {
  std::map<int, int> column;
  for (const auto& p : pts) {
    if (p.u < u0) continue;
    auto [it, fresh] = column.emplace(p.u, p.v);
    if (!fresh) it->second = upper ? std::max(it->second, p.v) : std::min(it->second, p.v);
  }
  std::vector<LatticePoint> hull;
  for (const auto& [u, v] : column) {
    LatticePoint p{u, v};
    while (hull.size() >= 2) {
      long c = cross(hull[hull.size() - 2], hull.back(), p);
      if (upper ? c >= 0 : c <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

PolygonEdge sloped(const LatticePoint& a, const LatticePoint& b) {
  return {EdgeKind::Sloped, rat(b.v - a.v, b.u - a.u), b.u - a.u, a, b};
}

int valuation_at(Poly p, const Poly& f) {
  int v = 0;
  while (true) {
    auto [q, r] = divmod(p, f);
    if (!r.is_zero()) return v;
    p = q;
    ++v;
  }
}

}  // namespace

std::vector<Rat> NewtonPolygon::slopes_at_infinity() const {
  std::vector<Rat> out;
  if (top().length > 0) out.push_back(0);
  for (const auto& e : edges)
    if (e.kind == EdgeKind::Sloped && e.slope < 0) out.push_back(-e.slope);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> NewtonPolygon::slopes_at_zero() const {
  std::vector<Rat> out;
  if (bottom().length > 0) out.push_back(0);
  for (const auto& e : edges)
    if (e.kind == EdgeKind::Sloped && e.slope > 0) out.push_back(e.slope);
  std::sort(out.begin(), out.end());
  return out;
}

NewtonPolygon polygon_from_points(std::vector<LatticePoint> points) {
  if (points.empty()) throw Error("polygon of the zero operator");
  int vmax = points[0].v, vmin = points[0].v;
  for (const auto& p : points) {
    vmax = std::max(vmax, p.v);
    vmin = std::min(vmin, p.v);
  }
  int top_u = -1, bottom_u = -1;
  for (const auto& p : points) {
    if (p.v == vmax) top_u = std::max(top_u, p.u);
    if (p.v == vmin) bottom_u = std::max(bottom_u, p.u);
  }
  auto upper = chain(points, top_u, true);
  auto lower = chain(points, bottom_u, false);

  NewtonPolygon n;
  n.edges.push_back({EdgeKind::MinusZero, 0, top_u, upper.front(), upper.front()});
  for (std::size_t k = 1; k < upper.size(); ++k) n.edges.push_back(sloped(upper[k - 1], upper[k]));
  for (std::size_t k = 1; k < lower.size(); ++k) n.edges.push_back(sloped(lower[k - 1], lower[k]));
  n.edges.push_back({EdgeKind::PlusZero, 0, bottom_u, lower.front(), lower.front()});

  n.vertices = upper;
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
    if (*it == n.vertices.back()) continue;
    if (std::next(it) == lower.rend() && *it == n.vertices.front()) continue;
    n.vertices.push_back(*it);
  }
  return n;
}

NewtonPolygon polygon(const DiffOp& op) {
  std::vector<LatticePoint> pts;
  for (int i = 0; i <= op.order(); ++i) {
    const Poly& q = op.coeff(i);
    for (int j = 0; j <= q.degree(); ++j)
      if (q[static_cast<std::size_t>(j)] != 0) pts.push_back({i, j - i});
  }
  return polygon_from_points(std::move(pts));
}

NewtonPolygon fl_polygon_map(const NewtonPolygon& n) {
  std::vector<LatticePoint> pts;
  for (const auto& p : n.vertices) pts.push_back({p.u + p.v, -p.v});
  return polygon_from_points(std::move(pts));
}

NewtonPolygon local_polygon(const DiffOp& op, const Poly& factor) {
  std::vector<LatticePoint> pts;
  for (int i = 0; i <= op.order(); ++i)
    if (!op.coeff(i).is_zero()) pts.push_back({i, valuation_at(op.coeff(i), factor) - i});
  return polygon_from_points(std::move(pts));
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::Trivial: return "trivial";
    case PointClass::Regular: return "regular";
    case PointClass::Irregular: return "irregular";
  }
  return {};
}

std::string to_string(const Point& p) {
  if (std::holds_alternative<AtInfinity>(p)) return "infinity";
  return to_string(std::get<Rat>(p));
}

bool SingularityReport::fuchsian() const {
  if (infinity.classification == PointClass::Irregular) return false;
  return std::none_of(finite.begin(), finite.end(), [](const FiniteSingularity& s) {
    return s.classification == PointClass::Irregular;
  });
}

Poly indicial_polynomial(const DiffOp& op, const Point& at) {
  DiffOp local = std::holds_alternative<AtInfinity>(at) ? invert(op) : translate(op, std::get<Rat>(at));
  LaurentTheta lt = to_laurent_theta(local);
  if (lt.empty()) throw Error("indicial polynomial of the zero operator");
  const Poly& p = lt.begin()->second;
  if (p.degree() < 1) throw Error("no slope-0 edge at " + to_string(at));
  return p;
}

Exponents exponents(const DiffOp& op, const Point& at) {
  auto rr = rational_roots(indicial_polynomial(op, at));
  return {std::move(rr.roots), std::move(rr.remainder)};
}

SingularityReport singularities(const DiffOp& op, std::size_t trivial_check_order) {
  if (op.order() < 1) throw Error("singularities require positive order");
  const int mu = op.order();
  SingularityReport rep;
  auto rr = rational_roots(op.lead());

  for (const auto& [a, mult] : rr.roots) {
    FiniteSingularity s;
    s.factor = Poly(std::vector<Rat>{Rat(-a), Rat(1)});
    s.roots = {a};
    auto lp = local_polygon(op, s.factor);
    for (const auto& sl : lp.slopes_at_zero())
      if (sl > 0) s.slopes.push_back(sl);
    if (!s.slopes.empty()) {
      s.classification = PointClass::Irregular;
    } else {
      s.classification = PointClass::Regular;
      s.exponents = exponents(op, a);
      std::vector<Rat> ex;
      for (const auto& r : s.exponents.rational)
        for (int k = 0; k < r.multiplicity; ++k) ex.push_back(r.root);
      bool candidate = s.exponents.remainder.is_constant() &&
                       static_cast<int>(ex.size()) == mu &&
                       std::all_of(s.exponents.rational.begin(), s.exponents.rational.end(),
                                   [](const RootMultiplicity& r) {
                                     return r.multiplicity == 1 && is_integer(r.root) && r.root >= 0;
                                   });
      if (candidate) {
        auto basis = frobenius_basis(op, a, trivial_check_order);
        bool log_free = std::all_of(basis.solutions.begin(), basis.solutions.end(),
                                    [](const FormalSolution& f) { return f.log_degree == 0; });
        if (!basis.deficient && log_free) s.classification = PointClass::Trivial;
      }
    }
    rep.finite.push_back(std::move(s));
  }

  if (!rr.remainder.is_constant()) {
    for (const auto& [f, mult] : squarefree_factorization(rr.remainder)) {
      FiniteSingularity s;
      s.factor = f.monic();
      auto lp = local_polygon(op, s.factor);
      for (const auto& sl : lp.slopes_at_zero())
        if (sl > 0) s.slopes.push_back(sl);
      s.classification = s.slopes.empty() ? PointClass::Regular : PointClass::Irregular;
      rep.finite.push_back(std::move(s));
    }
  }

  auto global = polygon(op);
  for (const auto& sl : global.slopes_at_infinity())
    if (sl > 0) rep.infinity.slopes.push_back(sl);
  rep.infinity.classification =
      rep.infinity.slopes.empty() ? PointClass::Regular : PointClass::Irregular;
  if (global.top().length > 0) rep.infinity.exponents = exponents(op, AtInfinity{});
  return rep;
}

EShapeReport is_E_shape(const DiffOp& op) {
  EShapeReport r;
  auto rep = singularities(op);
  r.finite_only_zero = true;
  for (const auto& s : rep.finite) {
    if (s.factor == Poly::variable()) continue;
    r.finite_only_zero = false;
    r.reasons.push_back("finite singularity at root of " + to_string(s.factor));
  }

  auto lp = local_polygon(op, Poly::variable());
  if (lp.bottom().length != op.order()) {
    r.reasons.push_back("0 is an irregular singularity");
  } else {
    auto ex = exponents(op, Rat(0));
    r.zero_regular_rational = ex.remainder.is_constant();
    if (!r.zero_regular_rational) r.reasons.push_back("non-rational exponents at 0");
  }

  r.infinity_slopes_ok = true;
  for (const auto& sl : polygon(op).slopes_at_infinity()) {
    if (sl == 0 || sl == 1) continue;
    r.infinity_slopes_ok = false;
    r.reasons.push_back("slope " + to_string(sl) + " at infinity");
  }
  return r;
}

std::string to_string(const NewtonPolygon& n) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& p : n.vertices) os << " (" << p.u << "," << p.v << ")";
  os << "; edges:";
  for (const auto& e : n.edges) {
    switch (e.kind) {
      case EdgeKind::MinusZero: os << " -0"; break;
      case EdgeKind::PlusZero: os << " +0"; break;
      case EdgeKind::Sloped: os << " " << to_string(e.slope); break;
    }
    os << "[" << e.length << "]";
  }
  return os.str();
}

}  // namespace gevrey
