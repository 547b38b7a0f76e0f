#pragma once

// Embedded graphs on the doubled polygon and the geodesic-net conditions:
// balanced vertices, geodesic edges, embeddedness, and the per-face
// Gauss-Bonnet budget. Faces come from the rotation system induced by the
// geometric embedding; cone points are assigned to faces by shooting a probe
// geodesic from each cone to its first net crossing.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "netlab/tracer.hpp"

namespace netlab {

enum class GraphType { Theta, FigureEight, Bifocal, General3Regular, Other };

inline const char* graph_type_name(GraphType t) {
  switch (t) {
    case GraphType::Theta: return "theta";
    case GraphType::FigureEight: return "figure8";
    case GraphType::Bifocal: return "bifocal";
    case GraphType::General3Regular: return "general3regular";
    case GraphType::Other: return "other";
  }
  return "other";
}

struct NetEdge {
  int a = 0;
  int b = 0;
  GeodesicPath path;
};

struct Net {
  PolygonSpec surface_spec;
  std::vector<SurfacePoint> vertices;
  std::vector<NetEdge> edges;
  GraphType graph_type = GraphType::Other;
};

struct FaceBudget {
  int id = 0;
  int y = 0; // boundary net-vertices, counted with multiplicity
  int x = 0; // enclosed cone points
  double cone_curvature = 0.0;
  std::vector<double> turning_angles;
  double residual = 0.0;
  std::vector<int> cone_indices;
};

struct VerificationReport {
  bool pass = false;
  std::vector<double> vertex_defects;
  double max_vertex_defect = 0.0;
  std::vector<double> edge_endpoint_defects;
  double max_endpoint_defect = 0.0;
  std::vector<double> edge_deviations;
  double max_edge_deviation = 0.0;
  bool embedded = false;
  int V = 0, E = 0, F = 0;
  bool euler_ok = false;
  bool cones_partitioned = false;
  std::vector<FaceBudget> faces;
  double max_residual = 0.0;
  std::string failure;
};

// Euclidean norm of the sum of outgoing unit tangents at a vertex.
inline double balancing_defect(const std::vector<Vec2>& tangents) {
  if (tangents.size() < 3)
    throw Error(ErrorCode::FewerThanThree, "a net vertex has degree at least three");
  Vec2 sum{0, 0};
  for (Vec2 t : tangents) sum += t.normalized();
  return sum.norm();
}

namespace detail {

// Disk-chart representation of a tangent vector at a net vertex. At an
// interior vertex the chart is the sheet's own chart; at an edge vertex the
// Bottom half is folded across the edge line so that both sheets share one
// chart carrying the surface orientation.
inline Vec2 vertex_chart_tangent(const Surface& surface, const SurfacePoint& v, Sheet sheet,
                                 Vec2 dir) {
  if (v.locus.is_on_edge() && sheet == Sheet::Bottom)
    return reflect_dir(dir, surface.edge(v.locus.index).dir);
  return dir;
}

// Orientation sign of the vertex chart relative to the surface: the Bottom
// chart is mirror-oriented.
inline double vertex_chart_sign(const SurfacePoint& v) {
  return (v.locus.is_interior() && v.sheet == Sheet::Bottom) ? -1.0 : 1.0;
}

struct HalfEdge {
  int edge = -1;
  bool forward = true; // a -> b
  int origin = -1;
  Vec2 tangent;      // away from origin, vertex chart
  double angle = 0.0;
};

struct FaceWalkResult {
  std::vector<std::vector<int>> cycles; // half-edge ids per face
  std::vector<HalfEdge> half_edges;
  std::vector<std::vector<double>> turnings; // per face, per corner
};

inline int reverse_half(int h) { return h ^ 1; }

inline FaceWalkResult face_walk(const Surface& surface, const Net& net) {
  FaceWalkResult r;
  int E = static_cast<int>(net.edges.size());
  r.half_edges.resize(static_cast<size_t>(2 * E));
  for (int i = 0; i < E; ++i) {
    const NetEdge& e = net.edges[static_cast<size_t>(i)];
    const GeodesicPath& p = e.path;
    HalfEdge fwd;
    fwd.edge = i;
    fwd.forward = true;
    fwd.origin = e.a;
    fwd.tangent = vertex_chart_tangent(surface, net.vertices[static_cast<size_t>(e.a)],
                                       p.segments.front().sheet, p.start_dir);
    HalfEdge rev;
    rev.edge = i;
    rev.forward = false;
    rev.origin = e.b;
    rev.tangent = vertex_chart_tangent(surface, net.vertices[static_cast<size_t>(e.b)],
                                       p.segments.back().sheet, -p.end_dir);
    fwd.angle = wrap_2pi(angle_of(fwd.tangent));
    rev.angle = wrap_2pi(angle_of(rev.tangent));
    r.half_edges[static_cast<size_t>(2 * i)] = fwd;
    r.half_edges[static_cast<size_t>(2 * i + 1)] = rev;
  }

  // Rotation system: outgoing half-edges around each vertex in the
  // counterclockwise order of the surface.
  int V = static_cast<int>(net.vertices.size());
  std::vector<std::vector<int>> rotation(static_cast<size_t>(V));
  for (int h = 0; h < 2 * E; ++h)
    rotation[static_cast<size_t>(r.half_edges[static_cast<size_t>(h)].origin)].push_back(h);
  for (int v = 0; v < V; ++v) {
    auto& rot = rotation[static_cast<size_t>(v)];
    std::sort(rot.begin(), rot.end(), [&](int a, int b) {
      return r.half_edges[static_cast<size_t>(a)].angle < r.half_edges[static_cast<size_t>(b)].angle;
    });
    if (vertex_chart_sign(net.vertices[static_cast<size_t>(v)]) < 0.0)
      std::reverse(rot.begin(), rot.end());
  }

  // Face traversal with the face on the left: after arriving at a vertex,
  // continue along the rotational predecessor of the reversed half-edge.
  auto next_in_face = [&](int h) {
    int rv = reverse_half(h);
    int v = r.half_edges[static_cast<size_t>(rv)].origin;
    const auto& rot = rotation[static_cast<size_t>(v)];
    auto it = std::find(rot.begin(), rot.end(), rv);
    size_t idx = static_cast<size_t>(it - rot.begin());
    return rot[(idx + rot.size() - 1) % rot.size()];
  };

  std::vector<bool> used(static_cast<size_t>(2 * E), false);
  for (int h0 = 0; h0 < 2 * E; ++h0) {
    if (used[static_cast<size_t>(h0)]) continue;
    std::vector<int> cycle;
    int h = h0;
    do {
      used[static_cast<size_t>(h)] = true;
      cycle.push_back(h);
      h = next_in_face(h);
    } while (h != h0);
    r.cycles.push_back(cycle);
  }

  // Turning angles: at a corner where the walk arrives along h and leaves
  // along h', the exterior turn is the signed angle from the incoming motion
  // to the outgoing motion, in the surface orientation.
  for (const auto& cycle : r.cycles) {
    std::vector<double> turns;
    size_t n = cycle.size();
    for (size_t k = 0; k < n; ++k) {
      int h = cycle[k];
      int hn = cycle[(k + 1) % n];
      const HalfEdge& rev = r.half_edges[static_cast<size_t>(reverse_half(h))];
      const HalfEdge& nxt = r.half_edges[static_cast<size_t>(hn)];
      Vec2 t_in = -rev.tangent;
      Vec2 t_out = nxt.tangent;
      double sign = vertex_chart_sign(net.vertices[static_cast<size_t>(rev.origin)]);
      turns.push_back(sign * signed_angle(t_in, t_out));
    }
    r.turnings.push_back(turns);
  }
  return r;
}

// Per-sheet planar segments of one half-edge traversal, in walk order.
inline std::vector<PathSegment> traversal_segments(const Net& net, const HalfEdge& he) {
  std::vector<PathSegment> segs = net.edges[static_cast<size_t>(he.edge)].path.segments;
  if (!he.forward) {
    std::reverse(segs.begin(), segs.end());
    for (PathSegment& s : segs) std::swap(s.a, s.b);
  }
  return segs;
}

// Registration of the face lying on one side of a per-sheet segment.
// Key: (net edge, segment index within the path, sheet seen by a prober,
// chart side sign). Seam segments key on the prober's sheet with side 0.
struct SideKey {
  int edge;
  int seg;
  int sheet; // 0 top, 1 bottom
  int side;  // -1 / +1 chart side, 0 for seam entries
  bool operator<(const SideKey& o) const {
    return std::tie(edge, seg, sheet, side) < std::tie(o.edge, o.seg, o.sheet, o.side);
  }
};

inline std::map<SideKey, int> register_face_sides(const Surface& surface, const Net& net,
                                                  const FaceWalkResult& walk) {
  std::map<SideKey, int> sides;
  for (size_t f = 0; f < walk.cycles.size(); ++f) {
    for (int h : walk.cycles[f]) {
      const HalfEdge& he = walk.half_edges[static_cast<size_t>(h)];
      const GeodesicPath& path = net.edges[static_cast<size_t>(he.edge)].path;
      int nseg = static_cast<int>(path.segments.size());
      for (int k = 0; k < nseg; ++k) {
        int seg_idx = he.forward ? k : nseg - 1 - k;
        const PathSegment& s = path.segments[static_cast<size_t>(seg_idx)];
        Vec2 dir = (he.forward ? s.b - s.a : s.a - s.b).normalized();
        if (path.seam) {
          // The walked face hugs the seam on its surface-left, which is the
          // Top side exactly when the inward normal lies left of the walk.
          const Edge& pe = surface.edge(path.start.locus.index);
          bool top_side = cross(dir, -pe.outward) > 0.0;
          sides[{he.edge, seg_idx, top_side ? 0 : 1, 0}] = static_cast<int>(f);
        } else {
          // Surface-left maps to chart-left on Top and chart-right on Bottom.
          int side = s.sheet == Sheet::Top ? 1 : -1;
          if (!he.forward) side = -side; // stored relative to forward direction
          sides[{he.edge, seg_idx, s.sheet == Sheet::Top ? 0 : 1, side}] = static_cast<int>(f);
        }
      }
    }
  }
  return sides;
}

// First intersection of a probe polyline with any net segment; fills the face
// id looked up from the side registrations. Returns false when the probe
// misses or the hit is too degenerate to take a side.
inline bool probe_hit_face(const Surface& surface, const Net& net,
                           const std::map<SideKey, int>& sides, const GeodesicPath& probe,
                           int* face_out) {
  double tol = 1e-9 * surface.scale();
  double best_t = std::numeric_limits<double>::infinity();
  int best_face = -1;
  double traveled = 0.0;
  for (const PathSegment& ps : probe.segments) {
    Vec2 w = ps.b - ps.a;
    double seg_len = w.norm();
    if (seg_len <= 0.0) continue;
    Vec2 wu = w / seg_len;
    for (size_t ei = 0; ei < net.edges.size(); ++ei) {
      const GeodesicPath& path = net.edges[ei].path;
      for (size_t k = 0; k < path.segments.size(); ++k) {
        const PathSegment& ns = path.segments[k];
        if (!path.seam && ns.sheet != ps.sheet) continue;
        Vec2 u = ns.b - ns.a;
        double ulen = u.norm();
        if (ulen <= 0.0) continue;
        Vec2 uu = u / ulen;
        double denom = cross(uu, wu);
        if (std::abs(denom) < 1e-9) continue; // near-parallel: ask again
        double t = cross(uu, ns.a - ps.a) / denom;          // along probe
        double s = cross(wu, ns.a - ps.a) / denom;          // along net segment
        if (t < tol || t > seg_len - tol) continue;
        if (s < tol * 10.0 || s > ulen - tol * 10.0) continue; // near an endpoint: ambiguous
        double global_t = traveled + t;
        if (global_t >= best_t) continue;
        int side = cross(uu, wu) > 0.0 ? -1 : 1; // side the probe came from
        SideKey key;
        if (path.seam) {
          key = {static_cast<int>(ei), static_cast<int>(k), ps.sheet == Sheet::Top ? 0 : 1, 0};
        } else {
          key = {static_cast<int>(ei), static_cast<int>(k), ns.sheet == Sheet::Top ? 0 : 1, side};
        }
        auto it = sides.find(key);
        if (it == sides.end()) return false;
        best_t = global_t;
        best_face = it->second;
      }
    }
    traveled += seg_len;
  }
  if (best_face < 0) return false;
  *face_out = best_face;
  return true;
}

// Face containing a cone point, found by walking a probe geodesic from just
// inside the cone's wedge until it meets the net.
inline int locate_cone_face(const Surface& surface, const Net& net,
                            const std::map<SideKey, int>& sides, const ConePoint& cone) {
  // Clearance of the cone from the net decides how far into the wedge the
  // probe may start.
  double clearance = std::numeric_limits<double>::infinity();
  for (const NetEdge& e : net.edges)
    for (const PathSegment& s : e.path.segments)
      clearance = std::min(clearance, point_segment_distance(cone.position, s.a, s.b));
  if (!(clearance > 0.0) || !std::isfinite(clearance)) return -1;

  int n = surface.edge_count();
  const Edge& e_next = surface.edge(cone.index);
  const Edge& e_prev = surface.edge((cone.index + n - 1) % n);
  Vec2 ray1 = e_next.dir;
  Vec2 ray2 = -e_prev.dir;
  Vec2 bisector = (ray1 + ray2).normalized();
  double wedge = std::abs(signed_angle(ray1, ray2));

  for (int attempt = 0; attempt < 48; ++attempt) {
    double frac = 0.5 + 0.37 * std::sin(2.39996322972865332 * (attempt + 1));
    double off = (frac - 0.5) * wedge * 0.9;
    Vec2 dir = rotate(bisector, off);
    Vec2 start = cone.position + dir * (0.45 * clearance);
    SurfacePoint sp;
    try {
      sp = surface.point(Sheet::Top, start);
    } catch (const Error&) {
      continue;
    }
    GeodesicPath probe;
    try {
      probe = trace(surface, sp, dir, TraceLimits{60.0 * surface.scale(), 256});
    } catch (const Error&) {
      continue; // grazed a cone: try another direction
    }
    int face = -1;
    if (probe_hit_face(surface, net, sides, probe, &face)) return face;
  }
  return -1;
}

inline bool edges_share_vertex_near(const Net& net, int e1, int e2, Vec2 q, double tol) {
  const NetEdge& a = net.edges[static_cast<size_t>(e1)];
  const NetEdge& b = net.edges[static_cast<size_t>(e2)];
  for (int va : {a.a, a.b})
    for (int vb : {b.a, b.b})
      if (va == vb && distance(net.vertices[static_cast<size_t>(va)].coords, q) <= tol)
        return true;
  return false;
}

// Pairwise segment check: edges may meet only at shared net vertices.
inline bool embedded(const Net& net, double tol) {
  struct SegRef {
    int edge;
    int idx;
    PathSegment s;
    bool seam;
  };
  std::vector<SegRef> segs;
  for (size_t ei = 0; ei < net.edges.size(); ++ei) {
    const GeodesicPath& p = net.edges[ei].path;
    for (size_t k = 0; k < p.segments.size(); ++k)
      segs.push_back({static_cast<int>(ei), static_cast<int>(k), p.segments[k], p.seam});
  }
  double touch_tol = tol;
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const SegRef& A = segs[i];
      const SegRef& B = segs[j];
      if (A.edge == B.edge && std::abs(A.idx - B.idx) <= 1) continue;
      if (!A.seam && !B.seam && A.s.sheet != B.s.sheet) continue;
      if (!segments_touch(A.s.a, A.s.b, B.s.a, B.s.b, touch_tol)) continue;
      // The contact must sit at a net vertex shared by both edges (or by the
      // two ends of one closed loop).
      Vec2 q;
      double dmin = std::numeric_limits<double>::infinity();
      for (Vec2 cand : {A.s.a, A.s.b, B.s.a, B.s.b}) {
        double d = std::max(point_segment_distance(cand, A.s.a, A.s.b),
                            point_segment_distance(cand, B.s.a, B.s.b));
        if (d < dmin) {
          dmin = d;
          q = cand;
        }
      }
      if (dmin > touch_tol * 4.0) return false; // interior crossing
      double vertex_tol = touch_tol * 4.0;
      if (A.edge == B.edge) {
        const NetEdge& e = net.edges[static_cast<size_t>(A.edge)];
        bool at_vertex =
            distance(net.vertices[static_cast<size_t>(e.a)].coords, q) <= vertex_tol ||
            distance(net.vertices[static_cast<size_t>(e.b)].coords, q) <= vertex_tol;
        if (!at_vertex) return false;
      } else if (!edges_share_vertex_near(net, A.edge, B.edge, q, vertex_tol)) {
        return false;
      }
    }
  }
  return true;
}

} // namespace detail

// Full geodesic-net verification. `tol` bounds the geometric defects
// (default 1e-9 * scale); `residual_tol` bounds per-face Gauss-Bonnet
// residuals.
inline VerificationReport verify(const Net& net, const Surface& surface, double tol = -1.0,
                                 double residual_tol = 1e-8) {
  if (tol <= 0.0) tol = 1e-9 * surface.scale();
  VerificationReport rep;
  rep.V = static_cast<int>(net.vertices.size());
  rep.E = static_cast<int>(net.edges.size());

  if (net.vertices.empty() || net.edges.empty())
    throw Error(ErrorCode::MalformedNet, "net has no vertices or edges");
  for (const NetEdge& e : net.edges) {
    if (e.a < 0 || e.a >= rep.V || e.b < 0 || e.b >= rep.V)
      throw Error(ErrorCode::MalformedNet, "edge endpoint index out of range");
    if (e.path.segments.empty())
      throw Error(ErrorCode::MalformedNet, "edge carries no geometry");
  }
  for (size_t i = 0; i < net.vertices.size(); ++i) {
    if (net.vertices[i].locus.is_at_cone())
      throw Error(ErrorCode::MalformedNet, "net vertex at a cone point");
    for (size_t j = i + 1; j < net.vertices.size(); ++j)
      if (same_surface_point(net.vertices[i], net.vertices[j], tol))
        throw Error(ErrorCode::MalformedNet, "duplicate net vertices");
  }
  std::vector<int> degree(static_cast<size_t>(rep.V), 0);
  for (const NetEdge& e : net.edges) {
    degree[static_cast<size_t>(e.a)]++;
    degree[static_cast<size_t>(e.b)]++;
  }
  for (int d : degree)
    if (d < 3) throw Error(ErrorCode::MalformedNet, "net vertex of degree below three");

  bool ok = true;
  auto fail = [&](const std::string& why) {
    if (ok) rep.failure = why;
    ok = false;
  };

  // Endpoint coincidence and geodesic straightness per edge.
  for (const NetEdge& e : net.edges) {
    const GeodesicPath& p = e.path;
    double da = distance(p.start.coords, net.vertices[static_cast<size_t>(e.a)].coords);
    double db = distance(p.end.coords, net.vertices[static_cast<size_t>(e.b)].coords);
    double d = std::max(da, db);
    if (!same_surface_point(p.start, net.vertices[static_cast<size_t>(e.a)], tol) ||
        !same_surface_point(p.end, net.vertices[static_cast<size_t>(e.b)], tol))
      d = std::max(d, tol * 2.0);
    rep.edge_endpoint_defects.push_back(d);
    rep.max_endpoint_defect = std::max(rep.max_endpoint_defect, d);
    double dev = 0.0;
    try {
      dev = develop(surface, p).max_deviation;
    } catch (const Error&) {
      dev = std::numeric_limits<double>::infinity();
    }
    rep.edge_deviations.push_back(dev);
    rep.max_edge_deviation = std::max(rep.max_edge_deviation, dev);
  }
  if (rep.max_endpoint_defect > tol) fail("edge endpoints away from their vertices");
  if (rep.max_edge_deviation > 1e-9 * surface.scale()) fail("edge development not straight");

  // Balancing at every vertex.
  std::vector<std::vector<Vec2>> tangents(static_cast<size_t>(rep.V));
  for (const NetEdge& e : net.edges) {
    const GeodesicPath& p = e.path;
    tangents[static_cast<size_t>(e.a)].push_back(detail::vertex_chart_tangent(
        surface, net.vertices[static_cast<size_t>(e.a)], p.segments.front().sheet, p.start_dir));
    tangents[static_cast<size_t>(e.b)].push_back(detail::vertex_chart_tangent(
        surface, net.vertices[static_cast<size_t>(e.b)], p.segments.back().sheet, -p.end_dir));
  }
  for (int v = 0; v < rep.V; ++v) {
    double d = balancing_defect(tangents[static_cast<size_t>(v)]);
    rep.vertex_defects.push_back(d);
    rep.max_vertex_defect = std::max(rep.max_vertex_defect, d);
  }
  if (rep.max_vertex_defect > tol) fail("vertex balancing defect above tolerance");

  // Faces and Euler characteristic.
  detail::FaceWalkResult walk = detail::face_walk(surface, net);
  rep.F = static_cast<int>(walk.cycles.size());
  rep.euler_ok = (rep.V - rep.E + rep.F == 2);
  if (!rep.euler_ok) fail("V - E + F differs from 2");

  // Cone points assigned to faces.
  auto sides = detail::register_face_sides(surface, net, walk);
  std::vector<std::vector<int>> face_cones(walk.cycles.size());
  rep.cones_partitioned = true;
  for (const ConePoint& c : surface.cone_points()) {
    int f = detail::locate_cone_face(surface, net, sides, c);
    if (f < 0) {
      rep.cones_partitioned = false;
      continue;
    }
    face_cones[static_cast<size_t>(f)].push_back(c.index);
  }
  if (!rep.cones_partitioned) fail("failed to assign every cone point to a face");

  for (size_t f = 0; f < walk.cycles.size(); ++f) {
    FaceBudget fb;
    fb.id = static_cast<int>(f);
    fb.y = static_cast<int>(walk.cycles[f].size());
    fb.turning_angles = walk.turnings[f];
    fb.cone_indices = face_cones[f];
    fb.x = static_cast<int>(face_cones[f].size());
    for (int ci : face_cones[f]) fb.cone_curvature += surface.cone(ci).curvature;
    double turn_sum = 0.0;
    for (double t : fb.turning_angles) turn_sum += t;
    fb.residual = fb.cone_curvature + turn_sum - kTwoPi;
    rep.max_residual = std::max(rep.max_residual, std::abs(fb.residual));
    rep.faces.push_back(fb);
  }
  if (rep.max_residual > residual_tol) fail("per-face Gauss-Bonnet residual above tolerance");

  rep.embedded = detail::embedded(net, tol);
  if (!rep.embedded) fail("edges intersect away from shared vertices");

  rep.pass = ok;
  return rep;
}

enum class PartitionType { Theta, FigureEight, Bifocal, Other };

inline const char* partition_type_name(PartitionType t) {
  switch (t) {
    case PartitionType::Theta: return "theta";
    case PartitionType::FigureEight: return "figure8";
    case PartitionType::Bifocal: return "bifocal";
    case PartitionType::Other: return "other";
  }
  return "other";
}

// Classification of three-face partitions per the sphere Euler count.
inline PartitionType classify_partition(const Net& net, const VerificationReport& report) {
  if (report.F != 3) return PartitionType::Other;
  int loops = 0;
  for (const NetEdge& e : net.edges)
    if (e.a == e.b) ++loops;
  if (report.V == 1 && report.E == 2 && loops == 2) return PartitionType::FigureEight;
  if (report.V == 2 && report.E == 3 && loops == 0) return PartitionType::Theta;
  if (report.V == 2 && report.E == 3 && loops == 2) return PartitionType::Bifocal;
  return PartitionType::Other;
}

// Exhaustive enumeration of connected multigraphs with E = V + 1 and minimum
// degree three, for V up to `max_vertices`. The only inhabited shapes are the
// three three-face partition types.
inline std::set<PartitionType> enumerate_three_face_partitions(int max_vertices = 4) {
  std::set<PartitionType> found;
  for (int V = 1; V <= max_vertices; ++V) {
    int E = V + 1;
    // Unordered vertex pairs including loops.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < V; ++i)
      for (int j = i; j < V; ++j) pairs.emplace_back(i, j);
    // Multisets of E pairs via nondecreasing index sequences.
    std::vector<int> pick(static_cast<size_t>(E), 0);
    for (;;) {
      std::vector<int> degree(static_cast<size_t>(V), 0);
      for (int p : pick) {
        degree[static_cast<size_t>(pairs[static_cast<size_t>(p)].first)]++;
        degree[static_cast<size_t>(pairs[static_cast<size_t>(p)].second)]++;
      }
      bool deg_ok = true;
      for (int d : degree) deg_ok = deg_ok && d >= 3;
      if (deg_ok) {
        // Connectivity over non-loop edges.
        std::vector<int> comp(static_cast<size_t>(V));
        for (int i = 0; i < V; ++i) comp[static_cast<size_t>(i)] = i;
        std::function<int(int)> find = [&](int x) {
          while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)];
          return x;
        };
        for (int p : pick) {
          int a = find(pairs[static_cast<size_t>(p)].first);
          int b = find(pairs[static_cast<size_t>(p)].second);
          if (a != b) comp[static_cast<size_t>(a)] = b;
        }
        bool connected = true;
        for (int i = 0; i < V; ++i) connected = connected && find(i) == find(0);
        if (connected) {
          int loops = 0;
          for (int p : pick)
            if (pairs[static_cast<size_t>(p)].first == pairs[static_cast<size_t>(p)].second)
              ++loops;
          if (V == 1 && E == 2 && loops == 2)
            found.insert(PartitionType::FigureEight);
          else if (V == 2 && E == 3 && loops == 0)
            found.insert(PartitionType::Theta);
          else if (V == 2 && E == 3 && loops == 2)
            found.insert(PartitionType::Bifocal);
          else
            found.insert(PartitionType::Other);
        }
      }
      // Next nondecreasing sequence.
      int k = E - 1;
      while (k >= 0 && pick[static_cast<size_t>(k)] == static_cast<int>(pairs.size()) - 1) --k;
      if (k < 0) break;
      int v = ++pick[static_cast<size_t>(k)];
      for (int m = k + 1; m < E; ++m) pick[static_cast<size_t>(m)] = v;
    }
  }
  return found;
}

} // namespace netlab
