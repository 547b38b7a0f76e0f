#pragma once

// Geometry kernel for doubled polygons: two congruent copies of a convex
// polygon glued along their boundary. The result is a topological sphere,
// flat away from the cone points sitting at the polygon vertices. Points
// carry a sheet tag; boundary points are shared between sheets.

#include <optional>
#include <vector>

#include "netlab/geometry.hpp"

namespace netlab {

enum class Sheet { Top, Bottom };

inline Sheet other(Sheet s) { return s == Sheet::Top ? Sheet::Bottom : Sheet::Top; }

struct PolygonSpec {
  enum class Kind { Regular, Triangle };
  Kind kind = Kind::Regular;
  int n = 3;                    // Regular only
  double angles[3] = {0, 0, 0}; // Triangle only, radians
  double scale = 1.0;           // circumradius (Regular) or longest side (Triangle)

  static PolygonSpec regular(int n, double scale = 1.0) {
    PolygonSpec s;
    s.kind = Kind::Regular;
    s.n = n;
    s.scale = scale;
    return s;
  }
  static PolygonSpec triangle(double a, double b, double c, double scale = 1.0) {
    PolygonSpec s;
    s.kind = Kind::Triangle;
    s.angles[0] = a;
    s.angles[1] = b;
    s.angles[2] = c;
    s.scale = scale;
    return s;
  }
};

struct ConePoint {
  int index = 0;
  Vec2 position;
  double interior_angle = 0.0; // of the base polygon, radians
  double curvature = 0.0;      // 2*pi - 2*interior_angle on the double
};

struct Edge {
  int index = 0;
  Vec2 a, b;        // endpoints, counterclockwise order
  Vec2 dir;         // unit a -> b
  Vec2 outward;     // unit outward normal
  double offset;    // dot(p, outward) == offset on the edge line
  double length;
  Vec2 midpoint() const { return (a + b) * 0.5; }
  Vec2 point_at(double t) const { return a + (b - a) * t; }
};

struct Locus {
  enum class Kind { Interior, OnEdge, AtCone };
  Kind kind = Kind::Interior;
  int index = -1;     // edge or cone index
  double param = 0.0; // edge parameter in (0,1)

  static Locus interior() { return {}; }
  static Locus on_edge(int e, double t) { return {Kind::OnEdge, e, t}; }
  static Locus at_cone(int c) { return {Kind::AtCone, c, 0.0}; }
  bool is_interior() const { return kind == Kind::Interior; }
  bool is_on_edge() const { return kind == Kind::OnEdge; }
  bool is_at_cone() const { return kind == Kind::AtCone; }
};

struct SurfacePoint {
  Sheet sheet = Sheet::Top;
  Vec2 coords;
  Locus locus;
};

// Two surface points describe the same point of the double when their planar
// coordinates agree and they either share a sheet or sit on the glued
// boundary.
inline bool same_surface_point(const SurfacePoint& p, const SurfacePoint& q, double tol) {
  if (distance(p.coords, q.coords) > tol) return false;
  if (p.sheet == q.sheet) return true;
  return !p.locus.is_interior() && !q.locus.is_interior();
}

class Surface {
 public:
  explicit Surface(const PolygonSpec& spec) : spec_(spec) {
    validate(spec);
    if (spec.kind == PolygonSpec::Kind::Regular) {
      build_regular(spec.n, spec.scale);
    } else {
      build_triangle(spec.angles, spec.scale);
    }
    finish();
  }

  const PolygonSpec& spec() const { return spec_; }
  double scale() const { return spec_.scale; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<size_t>(i)); }
  const std::vector<ConePoint>& cone_points() const { return cones_; }
  const ConePoint& cone(int i) const { return cones_.at(static_cast<size_t>(i)); }
  double snap_tolerance() const { return 1e-12 * spec_.scale; }
  bool is_regular() const { return spec_.kind == PolygonSpec::Kind::Regular; }

  // Signed distance to the outside: max over edges of dot(p, outward)-offset.
  double boundary_excess(Vec2 p) const {
    double worst = -std::numeric_limits<double>::infinity();
    for (const Edge& e : edges_) worst = std::max(worst, dot(p, e.outward) - e.offset);
    return worst;
  }

  bool contains(Vec2 p, double tol) const { return boundary_excess(p) <= tol; }

  Locus classify(Vec2 p) const {
    double tol = snap_tolerance();
    if (boundary_excess(p) > tol)
      throw Error(ErrorCode::OutsidePolygon, "point lies outside the base polygon");
    for (const ConePoint& c : cones_)
      if (distance(p, c.position) <= tol) return Locus::at_cone(c.index);
    for (const Edge& e : edges_) {
      if (std::abs(dot(p, e.outward) - e.offset) <= tol) {
        double t = dot(p - e.a, e.dir) / e.length;
        if (t > 0.0 && t < 1.0) return Locus::on_edge(e.index, t);
      }
    }
    return Locus::interior();
  }

  SurfacePoint point(Sheet sheet, Vec2 coords) const {
    return SurfacePoint{sheet, coords, classify(coords)};
  }

  SurfacePoint edge_midpoint(int edge_index) const {
    const Edge& e = edge(edge_index);
    return SurfacePoint{Sheet::Top, e.midpoint(), Locus::on_edge(edge_index, 0.5)};
  }

  Vec2 centroid() const {
    Vec2 c{0, 0};
    for (const Vec2& v : vertices_) c += v;
    return c / static_cast<double>(vertices_.size());
  }

  double total_curvature() const {
    double s = 0.0;
    for (const ConePoint& c : cones_) s += c.curvature;
    return s;
  }

  static void validate(const PolygonSpec& spec) {
    if (spec.scale <= 0.0) throw Error(ErrorCode::InvalidSpec, "scale must be positive");
    if (spec.kind == PolygonSpec::Kind::Regular) {
      if (spec.n < 3) throw Error(ErrorCode::InvalidSpec, "regular polygon needs n >= 3");
    } else {
      double sum = spec.angles[0] + spec.angles[1] + spec.angles[2];
      if (std::abs(sum - kPi) > 1e-12)
        throw Error(ErrorCode::InvalidSpec, "triangle angles must sum to pi");
      for (double a : spec.angles)
        if (!(a > 0.0 && a < kPi))
          throw Error(ErrorCode::InvalidSpec, "triangle angles must lie in (0, pi)");
    }
  }

 private:
  void build_regular(int n, double r) {
    vertices_.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
      vertices_.push_back(unit(kTwoPi * k / n) * r);
    double interior = kPi * (n - 2) / n;
    for (int k = 0; k < n; ++k) {
      // Curvature written as 4*pi/n directly; the double concentrates
      // 2*pi - 2*interior at each vertex and the two expressions agree.
      cones_.push_back({k, vertices_[static_cast<size_t>(k)], interior, 4.0 * kPi / n});
    }
  }

  void build_triangle(const double angles[3], double longest_side) {
    // Canonical placement: the longest side runs from the origin along +x.
    // The side opposite the largest angle is longest; ties pick the first
    // occurrence so that placement is reproducible.
    int imax = 0;
    for (int i = 1; i < 3; ++i)
      if (angles[i] > angles[imax] + 0.0) imax = i;
    double apex = angles[imax];
    double at_origin = angles[(imax + 1) % 3];
    double at_far = angles[(imax + 2) % 3];
    double L = longest_side;
    // Law of sines: side from origin to apex is opposite `at_far`.
    double side_from_origin = L * std::sin(at_far) / std::sin(apex);
    Vec2 v0{0.0, 0.0};
    Vec2 v1{L, 0.0};
    Vec2 v2 = unit(at_origin) * side_from_origin;
    vertices_ = {v0, v1, v2};
    double ia[3] = {at_origin, at_far, apex};
    for (int k = 0; k < 3; ++k)
      cones_.push_back({k, vertices_[static_cast<size_t>(k)], ia[k], 2.0 * kPi - 2.0 * ia[k]});
  }

  void finish() {
    int n = static_cast<int>(vertices_.size());
    Vec2 inner = centroid();
    for (int k = 0; k < n; ++k) {
      Edge e;
      e.index = k;
      e.a = vertices_[static_cast<size_t>(k)];
      e.b = vertices_[static_cast<size_t>((k + 1) % n)];
      e.length = distance(e.a, e.b);
      e.dir = (e.b - e.a) / e.length;
      Vec2 nrm = e.dir.perp();
      if (dot(inner - e.a, nrm) > 0.0) nrm = -nrm;
      e.outward = nrm;
      e.offset = dot(e.a, e.outward);
      edges_.push_back(e);
    }
  }

  PolygonSpec spec_;
  std::vector<Vec2> vertices_;
  std::vector<Edge> edges_;
  std::vector<ConePoint> cones_;
};

inline Surface build_surface(const PolygonSpec& spec) { return Surface(spec); }

} // namespace netlab
