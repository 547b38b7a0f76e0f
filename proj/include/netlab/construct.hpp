#pragma once

// Constructive builders for the net families that exist on doubled polygons:
// theta nets on regular 3n-gons, the tetrahedral 3-regular net on 4n-gons,
// figure-eights on odd-gons / isosceles triangles / the regular hexagon, the
// bifocal on the doubled 30-30-120 triangle, and corner-cut re-embedding.

#include <array>

#include "netlab/net.hpp"

namespace netlab {

inline double apothem(int n, double circumradius) {
  return circumradius * std::cos(kPi / n);
}

namespace detail {

inline Net make_net(const Surface& surface, GraphType type) {
  Net net;
  net.surface_spec = surface.spec();
  net.graph_type = type;
  return net;
}

inline int add_vertex(Net& net, const Surface& surface, Sheet sheet, Vec2 coords) {
  net.vertices.push_back(surface.point(sheet, coords));
  return static_cast<int>(net.vertices.size()) - 1;
}

} // namespace detail

// Theta net on the doubled regular 3k-gon: vertices at the two sheet centers,
// edges along the apothems through the midpoints of edges 0, k, 2k.
inline Net construct_theta_regular(int n, double scale = 1.0) {
  if (n < 3 || n % 3 != 0)
    throw Error(ErrorCode::NotMultipleOf3, "theta nets need n divisible by 3");
  Surface surface(PolygonSpec::regular(n, scale));
  Net net = detail::make_net(surface, GraphType::Theta);
  int top = detail::add_vertex(net, surface, Sheet::Top, {0, 0});
  int bottom = detail::add_vertex(net, surface, Sheet::Bottom, {0, 0});
  double len = 2.0 * apothem(n, scale);
  for (int k = 0; k < 3; ++k) {
    int e = k * (n / 3);
    Vec2 dir = unit(kTwoPi * (e + 0.5) / n);
    GeodesicPath path =
        trace(surface, net.vertices[static_cast<size_t>(top)], dir, TraceLimits{len, 1});
    net.edges.push_back({top, bottom, path});
  }
  return net;
}

// Tetrahedral 3-regular net on the doubled regular 4m-gon: four vertices in a
// quarter-rotation orbit, two central chords, and four edges crossing the
// midpoints of edges 0, m, 2m, 3m. The radius below solves the degree-3
// balance at each vertex.
inline Net construct_3regular_4n(int n, double scale = 1.0) {
  if (n < 4 || n % 4 != 0)
    throw Error(ErrorCode::NotMultipleOf4, "the tetrahedral net needs n divisible by 4");
  Surface surface(PolygonSpec::regular(n, scale));
  Net net = detail::make_net(surface, GraphType::General3Regular);
  int m = n / 4;
  double beta = kPi / n; // midpoint of edge 0
  double rho = apothem(n, scale);
  double r = rho * std::numbers::sqrt2_v<double> * (3.0 - std::sqrt(3.0)) / 6.0;

  double a1 = beta + kPi / 4;
  int t1 = detail::add_vertex(net, surface, Sheet::Top, unit(a1) * r);
  int t2 = detail::add_vertex(net, surface, Sheet::Top, unit(a1 + kPi) * r);
  int b1 = detail::add_vertex(net, surface, Sheet::Bottom, unit(beta + 3 * kPi / 4) * r);
  int b2 = detail::add_vertex(net, surface, Sheet::Bottom, unit(beta + 7 * kPi / 4) * r);

  auto chord = [&](int va, int vb) {
    const SurfacePoint& pa = net.vertices[static_cast<size_t>(va)];
    const SurfacePoint& pb = net.vertices[static_cast<size_t>(vb)];
    Vec2 d = (pb.coords - pa.coords).normalized();
    GeodesicPath p = trace(surface, pa, d, TraceLimits{distance(pa.coords, pb.coords), 0});
    net.edges.push_back({va, vb, p});
  };
  auto through_midpoint = [&](int va, int edge_index, int vb) {
    const SurfacePoint& pa = net.vertices[static_cast<size_t>(va)];
    Vec2 mid = surface.edge(edge_index).midpoint();
    Vec2 d = (mid - pa.coords).normalized();
    double len = 2.0 * distance(pa.coords, mid); // the midpoint bisects the development
    GeodesicPath p = trace(surface, pa, d, TraceLimits{len, 1});
    net.edges.push_back({va, vb, p});
  };

  chord(t1, t2);
  chord(b1, b2);
  through_midpoint(t1, m, b1);
  through_midpoint(t1, 0, b2);
  through_midpoint(t2, 2 * m, b1);
  through_midpoint(t2, 3 * m, b2);
  return net;
}

namespace detail {

// Figure-eight from two loops at a shared anchor vertex.
inline Net assemble_figure8(const Surface& surface, const GeodesicPath& loop1,
                            const GeodesicPath& loop2) {
  Net net = make_net(surface, GraphType::FigureEight);
  SurfacePoint anchor = loop1.start;
  net.vertices.push_back(anchor);
  net.edges.push_back({0, 0, loop1});
  net.edges.push_back({0, 0, loop2});
  return net;
}

} // namespace detail

// Figure-eight on the doubled regular odd-gon: a closed geodesic through the
// midpoint of edge 0 whose two lobes cross the far edges (n-1)/2 and (n+1)/2
// perpendicularly and retrace through the mirror sheet.
inline Net construct_figure8_odd(int n, double scale = 1.0) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorCode::NotOdd,
                "the perpendicular construction closes up prematurely on even-gons");
  Surface surface(PolygonSpec::regular(n, scale));
  double beta = kPi / n;
  double rho = apothem(n, scale);
  SurfacePoint m0 = surface.edge_midpoint(0);
  double len = 2.0 * rho * (1.0 + std::cos(beta));
  GeodesicPath loop1 = trace(surface, m0, unit(kPi), TraceLimits{len, 1});
  GeodesicPath loop2 = trace(surface, m0, unit(2.0 * beta - kPi), TraceLimits{len, 1});
  return detail::assemble_figure8(surface, loop1, loop2);
}

// Figure-eight on a doubled isosceles triangle: self-intersection at the
// midpoint of the edge between the two equal angles, each lobe crossing its
// far leg perpendicularly.
inline Net construct_figure8_isosceles(double a0, double a1, double a2, double scale = 1.0) {
  double tol = 1e-10;
  Surface surface(PolygonSpec::triangle(a0, a1, a2, scale));
  const auto& cones = surface.cone_points();
  int vi = -1, vj = -1;
  for (int i = 0; i < 3 && vi < 0; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(cones[static_cast<size_t>(i)].interior_angle -
                   cones[static_cast<size_t>(j)].interior_angle) <= tol) {
        vi = i;
        vj = j;
        break;
      }
  if (vi < 0) throw Error(ErrorCode::NotIsosceles, "no pair of equal angles");

  int base = -1;
  for (int e = 0; e < 3; ++e) {
    int u = e, v = (e + 1) % 3;
    if ((u == vi && v == vj) || (u == vj && v == vi)) base = e;
  }
  SurfacePoint m = surface.edge_midpoint(base);
  Net net;
  std::vector<GeodesicPath> loops;
  for (int e = 0; e < 3; ++e) {
    if (e == base) continue;
    const Edge& leg = surface.edge(e);
    double dist = leg.offset - dot(m.coords, leg.outward);
    loops.push_back(trace(surface, m, leg.outward, TraceLimits{2.0 * dist, 1}));
  }
  return detail::assemble_figure8(surface, loops[0], loops[1]);
}

// Bifocal net on the doubled 30-30-120 triangle: two lobes around the 30
// degree cones crossing the legs perpendicularly at their midpoints, joined
// by a segment of the glued base edge. Degree-3 balance holds for any anchor
// position on the base; the leg-midpoint choice pins it.
inline Net construct_bifocal_30_30_120(double scale = 1.0) {
  Surface surface(PolygonSpec::triangle(kPi / 6, kPi / 6, 2 * kPi / 3, scale));
  Net net = detail::make_net(surface, GraphType::Bifocal);
  const Edge& base_edge = surface.edge(0);
  Vec2 w1c = base_edge.point_at(1.0 / 3.0);
  Vec2 w2c = base_edge.point_at(2.0 / 3.0);
  int w1 = detail::add_vertex(net, surface, Sheet::Top, w1c);
  int w2 = detail::add_vertex(net, surface, Sheet::Top, w2c);

  const Edge& leg1 = surface.edge(2); // through the cone at the origin
  const Edge& leg2 = surface.edge(1);
  double d1 = leg1.offset - dot(w1c, leg1.outward);
  double d2 = leg2.offset - dot(w2c, leg2.outward);
  GeodesicPath loop1 = trace(surface, net.vertices[0], leg1.outward, TraceLimits{2.0 * d1, 1});
  GeodesicPath loop2 = trace(surface, net.vertices[1], leg2.outward, TraceLimits{2.0 * d2, 1});
  GeodesicPath connector =
      trace(surface, net.vertices[0], base_edge.dir, TraceLimits{distance(w1c, w2c), 0});

  net.edges.push_back({w1, w1, loop1});
  net.edges.push_back({w2, w2, loop2});
  net.edges.push_back({w1, w2, connector});
  return net;
}

// Loop words of the hexagon figure-eight, found once by the word search
// (regenerate with `netlab search --n 6 --target figure8`) and kept as a
// fixture; the geometry is re-solved exactly on every call. The first lobe
// leaves the midpoint of edge 0 into the top sheet and crosses edges 1 and 3;
// the second is its mirror image traversed from the bottom sheet.
inline const std::vector<int>& hexagon_figure8_word() {
  static const std::vector<int> word = {1, 3};
  return word;
}

// Mirror image of a crossing word across the axis through the midpoint of
// edge 0: edge k maps to (n - k) mod n.
inline std::vector<int> mirror_word(const std::vector<int>& word, int n) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int e : word) out.push_back((n - e) % n);
  return out;
}

inline Net construct_figure8_hexagon(double scale = 1.0) {
  Surface surface(PolygonSpec::regular(6, scale));
  SurfacePoint anchor = surface.edge_midpoint(0);
  const std::vector<int>& w1 = hexagon_figure8_word();
  std::vector<int> w2 = mirror_word(w1, 6);
  std::reverse(w2.begin(), w2.end());
  auto sols1 = solve_closed_from(surface, w1, anchor, Sheet::Top);
  auto sols2 = solve_closed_from(surface, w2, anchor, Sheet::Bottom);
  if (sols1.empty() || sols2.empty())
    throw Error(ErrorCode::InvalidSpec, "hexagon figure-eight fixture failed to solve");
  return detail::assemble_figure8(surface, sols1[0].path, sols2[0].path);
}

// Re-embeds a net whose boundary crossings all happen at edge midpoints into
// the doubled regular to_n-gon; cutting the corners of the from_n-gon leaves
// the net untouched, which here is realized as a rotation and rescaling of
// the same combinatorics.
inline Net corner_cut_extend(const Net& net, int from_n, int to_n) {
  if (net.surface_spec.kind != PolygonSpec::Kind::Regular || net.surface_spec.n != from_n)
    throw Error(ErrorCode::InvalidSpec, "corner cutting needs a regular source polygon");
  if (to_n < from_n || to_n % from_n != 0)
    throw Error(ErrorCode::InvalidSpec, "target must be a multiple of the source");
  double scale = net.surface_spec.scale;
  double crossing_tol = 1e-9;
  for (const NetEdge& e : net.edges)
    for (const Crossing& c : e.path.crossings)
      if (std::abs(c.param - 0.5) > crossing_tol)
        throw Error(ErrorCode::NotMidpointPerpendicular,
                    "net crosses the polygon boundary away from an edge midpoint");

  int ratio = to_n / from_n;
  double theta = kPi / to_n - kPi / from_n;
  double grow = std::cos(kPi / to_n) / std::cos(kPi / from_n);
  Surface target(PolygonSpec::regular(to_n, scale));

  Net out;
  out.surface_spec = target.spec();
  out.graph_type = net.graph_type;
  for (const SurfacePoint& v : net.vertices)
    out.vertices.push_back(target.point(v.sheet, rotate(v.coords, theta) * grow));
  for (const NetEdge& e : net.edges) {
    const GeodesicPath& p = e.path;
    Vec2 dir = rotate(p.start_dir, theta);
    SurfacePoint start = out.vertices[static_cast<size_t>(e.a)];
    start.sheet = p.start.sheet;
    GeodesicPath np = trace(target, start, dir,
                            TraceLimits{p.length * grow, static_cast<int>(p.word.size())});
    std::vector<int> expected;
    for (int w : p.word) expected.push_back(w * ratio);
    if (np.word != expected ||
        distance(np.end.coords, out.vertices[static_cast<size_t>(e.b)].coords) >
            1e-9 * scale)
      throw Error(ErrorCode::NotMidpointPerpendicular,
                  "net geometry does not survive the corner cut");
    out.edges.push_back({e.a, e.b, np});
  }
  return out;
}

} // namespace netlab
