#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gevrey/weyl.hpp"

namespace gevrey {

struct LatticePoint {
  int u = 0, v = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

enum class EdgeKind { MinusZero, PlusZero, Sloped };

struct PolygonEdge {
  EdgeKind kind = EdgeKind::Sloped;
  Rat slope;       // 0 for the horizontal half-lines
  int length = 0;  // horizontal extent; u of the endpoint for half-lines
  LatticePoint from, to;
  friend bool operator==(const PolygonEdge&, const PolygonEdge&) = default;
};

// Convex hull of the half-lines {u <= i, v = j - i} over nonzero a_{i,j}.
// Vertices run from the top half-line's endpoint along the upper chain to
// the right column, then back along the lower chain. Edges: the -0 half-line,
// the negative-slope edges, the positive-slope edges, the +0 half-line.
struct NewtonPolygon {
  std::vector<LatticePoint> vertices;
  std::vector<PolygonEdge> edges;

  // Slopes at infinity are the negated negative slopes; 0 is listed when
  // the -0 half-line has positive length. Likewise at 0 with +0.
  std::vector<Rat> slopes_at_infinity() const;
  std::vector<Rat> slopes_at_zero() const;
  const PolygonEdge& top() const { return edges.front(); }
  const PolygonEdge& bottom() const { return edges.back(); }
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

NewtonPolygon polygon_from_points(std::vector<LatticePoint> points);
NewtonPolygon polygon(const DiffOp& op);
// Image under (u, v) -> (u + v, -v), the polygon of the Fourier transform.
NewtonPolygon fl_polygon_map(const NewtonPolygon& n);
// Lower chain of the points (i, v_f(Q_i) - i) for an irreducible factor f.
NewtonPolygon local_polygon(const DiffOp& op, const Poly& factor);

enum class PointClass { Trivial, Regular, Irregular };
std::string to_string(PointClass c);

struct Exponents {
  std::vector<RootMultiplicity> rational;
  Poly remainder;  // monic, no rational roots
};

struct FiniteSingularity {
  Poly factor;  // monic
  std::vector<Rat> roots;  // the rational root when factor is linear
  PointClass classification = PointClass::Regular;
  std::vector<Rat> slopes;  // positive slopes when irregular
  Exponents exponents;      // only for rational regular points
};

struct InfinityReport {
  PointClass classification = PointClass::Regular;
  std::vector<Rat> slopes;
  Exponents exponents;  // set when a -0 half-line of positive length exists
};

struct SingularityReport {
  std::vector<FiniteSingularity> finite;
  InfinityReport infinity;
  bool fuchsian() const;
};

// A point is 0, infinity, or a rational a.
struct AtInfinity {
  friend bool operator==(AtInfinity, AtInfinity) { return true; }
};
using Point = std::variant<Rat, AtInfinity>;
std::string to_string(const Point& p);

// Polynomial of the +0 half-line in the local theta form; exponents at
// infinity refer to the local variable 1/z.
Poly indicial_polynomial(const DiffOp& op, const Point& at);
Exponents exponents(const DiffOp& op, const Point& at);

SingularityReport singularities(const DiffOp& op, std::size_t trivial_check_order = 30);

struct EShapeReport {
  bool finite_only_zero = false;
  bool zero_regular_rational = false;
  bool infinity_slopes_ok = false;
  std::vector<std::string> reasons;
  bool ok() const { return finite_only_zero && zero_regular_rational && infinity_slopes_ok; }
};
EShapeReport is_E_shape(const DiffOp& op);

std::string to_string(const NewtonPolygon& n);

}  // namespace gevrey
