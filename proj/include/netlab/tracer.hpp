#pragma once

// Geodesic tracing on the doubled polygon. A geodesic is a straight line in
// the developed (unfolded) picture; in the base chart it is a billiard
// polyline that reflects across each crossed edge while flipping sheets.
// Tracing keeps the accumulated unfolding isometry so that path length is
// read off the straight development exactly.

#include <vector>

#include "netlab/surface.hpp"

namespace netlab {

// Angular slack below which an edge crossing counts as perpendicular.
inline constexpr double kPerpendicularTol = 1e-10;

struct TraceLimits {
  double max_length = 0.0;
  int max_crossings = 0;
};

struct PathSegment {
  Sheet sheet = Sheet::Top;
  Vec2 a, b;
};

struct Crossing {
  int edge = -1;
  double param = 0.0;
  bool perpendicular = false;
};

struct GeodesicPath {
  SurfacePoint start;
  Vec2 start_dir;           // unit, in the chart of start.sheet
  std::vector<int> word;    // crossed edge indices, in order
  std::vector<Crossing> crossings;
  double length = 0.0;
  SurfacePoint end;
  Vec2 end_dir;             // motion direction at arrival, final sheet chart
  std::vector<PathSegment> segments;
  bool seam = false;        // runs along a glued edge

  Sheet start_sheet() const { return start.sheet; }
  Sheet end_sheet() const { return end.sheet; }
  std::vector<int> perpendicular_crossings() const {
    std::vector<int> out;
    for (size_t i = 0; i < crossings.size(); ++i)
      if (crossings[i].perpendicular) out.push_back(static_cast<int>(i));
    return out;
  }
};

// Reflection across the supporting line of a polygon edge.
inline Iso2 edge_reflection(const Edge& e) { return Iso2::reflection(e.a, e.dir); }

// Unfolding isometries for a crossing word: D_0 = id and
// D_{k+1} = D_k ∘ refl(edge word[k]).
inline std::vector<Iso2> unfolding_isometries(const Surface& surface,
                                              const std::vector<int>& word) {
  std::vector<Iso2> isos;
  isos.reserve(word.size() + 1);
  isos.push_back(Iso2::identity());
  for (int e : word)
    isos.push_back(isos.back().compose(edge_reflection(surface.edge(e))));
  return isos;
}

namespace detail {

inline void check_cone_clearance(const Surface& surface, Vec2 a, Vec2 b) {
  double guard = 1e-12 * surface.scale();
  for (const ConePoint& c : surface.cone_points())
    if (point_segment_distance(c.position, a, b) < guard)
      throw Error(ErrorCode::SingularHit,
                  "trajectory passes through cone point " + std::to_string(c.index));
}

inline GeodesicPath trace_seam(const Surface& surface, const SurfacePoint& start, Vec2 dir,
                               const TraceLimits& lim) {
  const Edge& e = surface.edge(start.locus.index);
  double sign = dot(dir, e.dir) >= 0.0 ? 1.0 : -1.0;
  double t0 = start.locus.param;
  double guard = 1e-12 * surface.scale();
  double room = sign > 0.0 ? (1.0 - t0) * e.length : t0 * e.length;
  double len = lim.max_length;
  if (len >= room - guard)
    throw Error(ErrorCode::SingularHit, "seam trajectory reaches a cone point");
  Vec2 endp = start.coords + e.dir * (sign * len);
  GeodesicPath path;
  path.start = start;
  path.start_dir = e.dir * sign;
  path.length = len;
  path.end = surface.point(start.sheet, endp);
  path.end_dir = path.start_dir;
  path.segments.push_back({start.sheet, start.coords, endp});
  path.seam = true;
  return path;
}

} // namespace detail

// Straight-line trace with reflection at each edge crossing and a sheet flip.
// Stops at max_length or after max_crossings crossings (the final segment
// then ends on the boundary). Trajectories that pass within 1e-12 * scale of
// a cone point abort with SingularHit.
inline GeodesicPath trace(const Surface& surface, SurfacePoint start, Vec2 direction,
                          const TraceLimits& lim) {
  if (start.locus.is_at_cone())
    throw Error(ErrorCode::StartAtCone, "geodesics through cone points are undefined");
  if (lim.max_length <= 0.0 || lim.max_crossings < 0)
    throw Error(ErrorCode::InvalidSpec, "trace limits must be positive");

  Vec2 d = direction.normalized();

  if (start.locus.is_on_edge()) {
    const Edge& e0 = surface.edge(start.locus.index);
    double out = dot(d, e0.outward);
    if (std::abs(out) <= 1e-14) return detail::trace_seam(surface, start, d, lim);
    if (out > 0.0) {
      // Direction given in the chart of the far sheet: motion enters the
      // other sheet, where the same tangent reads as the reflected vector.
      start.sheet = other(start.sheet);
      d = reflect_dir(d, e0.dir);
    }
  }

  GeodesicPath path;
  path.start = start;
  path.start_dir = d;

  Sheet sheet = start.sheet;
  Vec2 p = start.coords;
  double traveled = 0.0;
  int skip_edge = start.locus.is_on_edge() ? start.locus.index : -1;

  for (;;) {
    // The exit edge is the nearest edge line ahead of the ray.
    int exit = -1;
    double t_exit = std::numeric_limits<double>::infinity();
    for (const Edge& e : surface.edges()) {
      if (e.index == skip_edge) continue;
      double facing = dot(d, e.outward);
      if (facing <= 1e-15) continue;
      double t = (e.offset - dot(p, e.outward)) / facing;
      if (t < -surface.snap_tolerance()) continue;
      if (t < t_exit) {
        t_exit = t;
        exit = e.index;
      }
    }
    if (exit < 0)
      throw Error(ErrorCode::InvalidSpec, "ray failed to exit the polygon");

    double remaining = lim.max_length - traveled;
    if (remaining <= t_exit) {
      Vec2 endp = p + d * remaining;
      detail::check_cone_clearance(surface, p, endp);
      path.segments.push_back({sheet, p, endp});
      traveled = lim.max_length;
      path.length = traveled;
      path.end = surface.point(sheet, endp);
      path.end_dir = d;
      return path;
    }

    const Edge& e = surface.edge(exit);
    Vec2 q = p + d * t_exit;
    detail::check_cone_clearance(surface, p, q);
    path.segments.push_back({sheet, p, q});
    traveled += t_exit;

    if (static_cast<int>(path.word.size()) == lim.max_crossings) {
      path.length = traveled;
      path.end = surface.point(sheet, q);
      path.end_dir = d;
      return path;
    }

    double cp = dot(q - e.a, e.dir) / e.length;
    bool perp = std::abs(dot(d, e.dir)) <= kPerpendicularTol;
    path.word.push_back(e.index);
    path.crossings.push_back({e.index, cp, perp});

    sheet = other(sheet);
    d = reflect_dir(d, e.dir);
    p = q;
    skip_edge = e.index;
  }
}

struct Development {
  std::vector<Iso2> isometries; // one per polygon copy, word.size() + 1 entries
  Vec2 start, end;              // developed endpoints
  double max_deviation = 0.0;   // of developed breakpoints from the chord
};

// Compose the reflection isometries along the word and check the developed
// polyline is a single straight segment.
inline Development develop(const Surface& surface, const GeodesicPath& path) {
  Development dev;
  dev.isometries = unfolding_isometries(surface, path.word);
  dev.start = path.start.coords;
  dev.end = dev.isometries.back().apply(path.end.coords);
  Vec2 chord = dev.end - dev.start;
  double chord_len = chord.norm();
  Vec2 u = chord_len > 0.0 ? chord / chord_len : path.start_dir;
  double worst = 0.0;
  for (size_t k = 0; k < path.segments.size(); ++k) {
    // Segment k lives in polygon copy k of the unfolding.
    const Iso2& iso = dev.isometries[k];
    Vec2 da = iso.apply(path.segments[k].a);
    Vec2 db = iso.apply(path.segments[k].b);
    worst = std::max(worst, std::abs(cross(u, da - dev.start)));
    worst = std::max(worst, std::abs(cross(u, db - dev.start)));
  }
  dev.max_deviation = worst;
  if (worst > 1e-9 * surface.scale())
    throw Error(ErrorCode::NotGeodesic, "developed polyline deviates from a straight chord");
  return dev;
}

// One developed crossing target: the image of the crossed edge, pulled in at
// both ends by the cone guard.
struct Gate {
  int edge = -1;
  Vec2 a, b;
};

// Unfolded polygon corridor for a crossing word. A straight segment realizes
// the word iff it passes through every gate in order; from a fixed basepoint
// that is an intersection of angular sightline intervals.
struct Corridor {
  const Surface* surface = nullptr;
  std::vector<int> word;
  std::vector<Iso2> isometries; // word.size() + 1 entries
  std::vector<Gate> gates;      // word.size() entries
  bool degenerate = false;      // consecutive repeats: the same gate twice

  // Directions from p that meet every gate in order, as an unwrapped angular
  // interval. Empty means the word is infeasible from p.
  AngleInterval window_from(Vec2 p) const {
    if (degenerate) return {};
    AngleInterval window;
    bool first = true;
    double ref = 0.0;
    for (const Gate& g : gates) {
      double ta = angle_of(g.a - p);
      double tb = angle_of(g.b - p);
      if (first) ref = ta;
      ta = unwrap_near(ta, ref);
      tb = unwrap_near(tb, ref);
      AngleInterval gi{std::min(ta, tb), std::max(ta, tb)};
      if (gi.width() >= kPi) return {}; // basepoint on or behind the gate line
      window = first ? gi : window.intersect(gi);
      first = false;
      if (window.empty()) return {};
      ref = window.mid();
    }
    return window;
  }

  bool feasible_from(Vec2 p) const { return !gates.empty() && !window_from(p).empty(); }

  bool admits(Vec2 p, Vec2 dir) const {
    AngleInterval w = window_from(p);
    if (w.empty()) return false;
    double a = unwrap_near(angle_of(dir), w.mid());
    return w.contains(a);
  }

  // Whether any straight segment (basepoint free) stabs all gates in order.
  // If a transversal exists there is one through two gate endpoints, so the
  // candidate set below is exhaustive up to degeneracies.
  bool stabbable() const {
    if (degenerate || gates.empty()) return false;
    if (gates.size() == 1) return true;
    std::vector<Vec2> pts;
    for (const Gate& g : gates) {
      pts.push_back(g.a);
      pts.push_back(g.b);
    }
    double tol = 1e-12 * surface->scale();
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = 0; j < pts.size(); ++j) {
        if (i / 2 == j / 2) continue;
        Vec2 o = pts[i];
        Vec2 u = (pts[j] - pts[i]).normalized();
        double prev = -std::numeric_limits<double>::infinity();
        bool ok = true;
        for (const Gate& g : gates) {
          // Line o + t*u meets segment [g.a, g.b]?
          Vec2 ga = g.a - o, gb = g.b - o;
          double ca = cross(u, ga), cb = cross(u, gb);
          if (ca > tol && cb > tol) { ok = false; break; }
          if (ca < -tol && cb < -tol) { ok = false; break; }
          double denom = ca - cb;
          double t;
          if (std::abs(denom) < 1e-300) {
            t = dot(ga, u); // collinear contact: take nearest param
          } else {
            double s = ca / denom;
            Vec2 hit = g.a + (g.b - g.a) * s;
            t = dot(hit - o, u);
          }
          if (t < prev - tol) { ok = false; break; }
          prev = t;
        }
        if (ok) return true;
      }
    }
    return false;
  }
};

inline Corridor develop_word(const Surface& surface, const std::vector<int>& word) {
  if (word.empty()) throw Error(ErrorCode::InvalidSpec, "develop_word needs a nonempty word");
  Corridor c;
  c.surface = &surface;
  c.word = word;
  for (size_t k = 0; k + 1 < word.size(); ++k)
    if (word[k] == word[k + 1]) c.degenerate = true;
  c.isometries = unfolding_isometries(surface, word);
  double guard = 1e-12 * surface.scale();
  for (size_t k = 0; k < word.size(); ++k) {
    const Edge& e = surface.edge(word[k]);
    Vec2 a = e.a + e.dir * guard;
    Vec2 b = e.b - e.dir * guard;
    c.gates.push_back({e.index, c.isometries[k].apply(a), c.isometries[k].apply(b)});
  }
  return c;
}

struct ClosedSolution {
  GeodesicPath path;
  double closure_angle = 0.0; // angle between arrival motion and departure, at the anchor
};

namespace detail {

// Cone clearance for the straight developed segment [p, e], checked copy by
// copy against that copy's vertex images, restricted to the parameter range
// the segment spends inside the copy.
inline bool developed_segment_clear(const Surface& surface, const Corridor& c, Vec2 p, Vec2 en) {
  double guard = 1e-12 * surface.scale();
  Vec2 dir = en - p;
  double len = dir.norm();
  if (len <= 0.0) return false;
  Vec2 u = dir / len;
  std::vector<double> cuts;
  cuts.push_back(0.0);
  for (const Gate& g : c.gates) {
    // Param where the segment crosses the gate line.
    Vec2 gd = (g.b - g.a).normalized();
    double denom = cross(gd, u);
    if (std::abs(denom) < 1e-300) return false;
    double t = cross(gd, g.a - p) / denom;
    cuts.push_back(std::clamp(t, 0.0, len));
  }
  cuts.push_back(len);
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    double t0 = cuts[k], t1 = cuts[k + 1];
    if (t1 < t0) return false;
    Vec2 a = p + u * t0;
    Vec2 b = p + u * t1;
    const Iso2& iso = c.isometries[k];
    for (const Vec2& v : surface.vertices())
      if (point_segment_distance(iso.apply(v), a, b) < guard) return false;
  }
  return true;
}

} // namespace detail

// Closed geodesic paths from `anchor` back to itself realizing `word`,
// departing into `depart_sheet`. The developed endpoint is the image of the
// anchor under the word's holonomy isometry, so the direction is determined
// in closed form; the corridor window then decides feasibility.
inline std::vector<ClosedSolution> solve_closed_from(const Surface& surface,
                                                     const std::vector<int>& word,
                                                     SurfacePoint anchor,
                                                     Sheet depart_sheet = Sheet::Top) {
  std::vector<ClosedSolution> out;
  if (word.empty()) return out;
  Corridor c = develop_word(surface, word);
  Vec2 p = anchor.coords;
  Vec2 target = c.isometries.back().apply(p);
  Vec2 chord = target - p;
  double len = chord.norm();
  if (len <= 1e-9 * surface.scale()) return out; // holonomy fixes the anchor
  // An endpoint on the final gate line means the last letter is the arrival
  // edge itself, not a genuine crossing.
  {
    const Gate& last = c.gates.back();
    Vec2 gn = (last.b - last.a).normalized().perp();
    if (std::abs(dot(target - last.a, gn)) <= 1e-9 * surface.scale()) return out;
  }
  AngleInterval w = c.window_from(p);
  if (w.empty()) return out;
  double theta = unwrap_near(angle_of(chord), w.mid());
  if (!w.contains(theta)) return out;
  if (!detail::developed_segment_clear(surface, c, p, target)) return out;

  SurfacePoint start = anchor;
  start.sheet = depart_sheet;
  GeodesicPath path;
  try {
    path = trace(surface, start, chord / len,
                 TraceLimits{len, static_cast<int>(word.size())});
  } catch (const Error&) {
    return out;
  }
  if (path.word != word) return out;
  if (distance(path.end.coords, p) > 1e-9 * surface.scale()) return out;

  ClosedSolution sol;
  sol.path = path;
  // Arrival motion compared with the departure, in the anchor's chart. Both
  // vectors are mapped through the sheet gluing when the legs sit on the far
  // sheet of an edge anchor.
  Vec2 dep = path.start_dir;
  Vec2 arr = path.end_dir;
  if (anchor.locus.is_on_edge()) {
    const Edge& e = surface.edge(anchor.locus.index);
    if (path.start.sheet == Sheet::Bottom) dep = reflect_dir(dep, e.dir);
    if (path.end.sheet == Sheet::Bottom) arr = reflect_dir(arr, e.dir);
  }
  sol.closure_angle = std::abs(signed_angle(arr, dep));
  out.push_back(sol);
  return out;
}

// Closed paths anchored at the midpoint of `start_edge`.
inline std::vector<ClosedSolution> solve_closed(const Surface& surface,
                                                const std::vector<int>& word,
                                                int start_edge) {
  return solve_closed_from(surface, word, surface.edge_midpoint(start_edge));
}

} // namespace netlab
