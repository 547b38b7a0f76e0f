#pragma once

// Bounded searches for the net families the admissibility constraints leave
// open: figure-eights on even-gons and bifocals on 12n-gons. Candidate loops
// are anchored at the midpoint of edge 0 (any figure-eight cylinder contains
// such a representative); crossing words are enumerated by depth-first
// descent of the unfolding corridor, whose angular window prunes infeasible
// prefixes, and closed loops are solved exactly from the word holonomy.

#include <optional>
#include <sstream>
#include <thread>

#include "netlab/admissibility.hpp"
#include "netlab/construct.hpp"

namespace netlab {

enum class SearchTarget { Figure8, Bifocal };

struct SearchConfig {
  int n = 6;
  SearchTarget target = SearchTarget::Figure8;
  int max_word_length = 24;
  double max_length = -1.0; // default 20 * scale
  bool report_near_misses = true;
  double near_miss_tolerance = 1e-3;
  double scale = 1.0;
  int threads = 1;

  double effective_max_length() const { return max_length > 0.0 ? max_length : 20.0 * scale; }
};

struct NearMiss {
  std::vector<int> word;
  double angle_defect = 0.0;
};

struct SearchReport {
  SearchConfig config;
  long long candidates_examined = 0;
  int exhaustive_up_to = 0;
  std::vector<Net> solutions;
  std::vector<NearMiss> near_misses;
  std::vector<std::string> notes;
};

namespace detail {

// Depth-first enumeration of crossing words feasible from a fixed basepoint.
// Each node carries the angular window of directions realizing the prefix;
// empty windows prune the subtree. Words are visited in lexicographic order
// by (length is NOT the outer key here; the caller sorts results).
class WordEnumerator {
 public:
  WordEnumerator(const Surface& surface, Vec2 basepoint, int max_len, double max_dist,
                 bool quotient_mirror)
      : surface_(surface),
        base_(basepoint),
        max_len_(max_len),
        max_dist_(max_dist),
        quotient_mirror_(quotient_mirror),
        guard_(1e-12 * surface.scale()) {}

  // Calls fn(word) for every corridor-feasible word from the basepoint.
  template <typename Fn>
  void enumerate(Fn&& fn) {
    std::vector<int> word;
    recurse(word, AngleInterval{}, Iso2::identity(), 0, std::forward<Fn>(fn));
  }

 private:
  template <typename Fn>
  void recurse(std::vector<int>& word, AngleInterval window, Iso2 iso, int mirror_cmp, Fn&& fn) {
    if (!word.empty()) fn(const_cast<const std::vector<int>&>(word));
    if (static_cast<int>(word.size()) >= max_len_) return;
    int n = surface_.edge_count();
    for (int e = 0; e < n; ++e) {
      if (!word.empty() && e == word.back()) continue;
      int cmp = mirror_cmp;
      if (quotient_mirror_ && cmp == 0) {
        int mirrored = (n - e) % n;
        if (e > mirrored) continue; // the mirror image enumerates this branch
        cmp = e < mirrored ? -1 : 0;
      }
      const Edge& pe = surface_.edge(e);
      Vec2 ga = iso.apply(pe.a + pe.dir * guard_);
      Vec2 gb = iso.apply(pe.b - pe.dir * guard_);
      if (point_segment_distance(base_, ga, gb) > max_dist_) continue;
      double ta = angle_of(ga - base_);
      double ref = word.empty() ? ta : window.mid();
      ta = unwrap_near(ta, ref);
      double tb = unwrap_near(angle_of(gb - base_), ref);
      AngleInterval gi{std::min(ta, tb), std::max(ta, tb)};
      if (gi.width() >= kPi) continue;
      AngleInterval next = word.empty() ? gi : window.intersect(gi);
      if (next.empty()) continue;
      word.push_back(e);
      recurse(word, next, iso.compose(edge_reflection(pe)), cmp, fn);
      word.pop_back();
    }
  }

  const Surface& surface_;
  Vec2 base_;
  int max_len_;
  double max_dist_;
  bool quotient_mirror_;
  double guard_;
};

// A solved closed loop from an anchor, with the data the pairing filters use:
// outgoing tangents in the anchor's disk chart, the positive turning angle of
// the loop side, and the cone count of the loop face.
struct LoopCandidate {
  GeodesicPath path;
  std::vector<int> word;
  Sheet depart_sheet = Sheet::Top;
  Vec2 dep, arr;       // outgoing unit tangents at the anchor
  double turning = 0.0;
  int loop_x = -1;
  std::vector<int> loop_cones;
};

// Face analysis of a single closed loop via the mini one-vertex net.
inline std::optional<LoopCandidate> analyze_loop(const Surface& surface,
                                                 const SurfacePoint& anchor,
                                                 const ClosedSolution& sol) {
  LoopCandidate c;
  c.path = sol.path;
  c.word = sol.path.word;
  c.depart_sheet = sol.path.start.sheet;
  c.dep = vertex_chart_tangent(surface, anchor, sol.path.segments.front().sheet,
                               sol.path.start_dir);
  c.arr = vertex_chart_tangent(surface, anchor, sol.path.segments.back().sheet,
                               -sol.path.end_dir);

  Net mini;
  mini.surface_spec = surface.spec();
  mini.vertices.push_back(anchor);
  mini.edges.push_back({0, 0, sol.path});
  FaceWalkResult walk = face_walk(surface, mini);
  if (walk.cycles.size() != 2) return std::nullopt;
  int loop_face = -1;
  for (int f = 0; f < 2; ++f) {
    if (walk.turnings[static_cast<size_t>(f)].size() != 1) return std::nullopt;
    double t = walk.turnings[static_cast<size_t>(f)][0];
    if (t > 0.0 && t < kPi) {
      loop_face = f;
      c.turning = t;
    }
  }
  if (loop_face < 0) return std::nullopt;
  auto sides = register_face_sides(surface, mini, walk);
  int x = 0;
  for (const ConePoint& cp : surface.cone_points()) {
    int f = locate_cone_face(surface, mini, sides, cp);
    if (f < 0) return std::nullopt;
    if (f == loop_face) {
      ++x;
      c.loop_cones.push_back(cp.index);
    }
  }
  c.loop_x = x;
  return c;
}

inline std::string word_key(const std::vector<int>& w, Sheet s) {
  std::string k = s == Sheet::Top ? "T" : "B";
  for (int e : w) k += ":" + std::to_string(e);
  return k;
}

// Canonical key of a two-loop solution modulo the symmetries fixing the
// anchor: the mirror through the anchor's apothem, the sheet swap, and
// reversal of the traversal.
inline std::string figure8_solution_key(int n, const GeodesicPath& l1, const GeodesicPath& l2) {
  auto loop_key = [&](std::vector<int> w, Sheet s, int transform) {
    if (transform & 1) w = mirror_word(w, n);
    if (transform & 2) s = other(s);
    if (transform & 4) {
      std::reverse(w.begin(), w.end());
      if (w.size() % 2 == 1) s = other(s);
    }
    return word_key(w, s);
  };
  std::string best;
  for (int t = 0; t < 8; ++t) {
    std::string k1 = loop_key(l1.word, l1.start.sheet, t);
    std::string k2 = loop_key(l2.word, l2.start.sheet, t);
    std::string key = k1 < k2 ? k1 + "|" + k2 : k2 + "|" + k1;
    if (best.empty() || key < best) best = key;
  }
  return best;
}

// Solve-and-analyze a loop word at an anchor, for one departure sheet.
inline std::optional<LoopCandidate> solve_loop(const Surface& surface,
                                               const SurfacePoint& anchor,
                                               const std::vector<int>& word, Sheet sheet) {
  auto sols = solve_closed_from(surface, word, anchor, sheet);
  if (sols.empty()) return std::nullopt;
  return analyze_loop(surface, anchor, sols[0]);
}

} // namespace detail

// Direction-sampling oracle: traces a fan of directions and records the
// trajectories that come back within 1e-6 * scale of the start.
struct BruteForceReturn {
  double direction = 0.0; // chart angle of the sampled direction
  std::vector<int> word;  // crossings before the near-return
  double length = 0.0;    // arc length at the closest approach
  double return_distance = 0.0;
};

inline std::vector<BruteForceReturn> brute_force_closed(const Surface& surface,
                                                        const SurfacePoint& start,
                                                        long long direction_samples,
                                                        double max_length, int threads = 1) {
  std::vector<BruteForceReturn> out;
  if (direction_samples < 1 || max_length <= 0.0) return out;
  double close_tol = 1e-6 * surface.scale();
  double min_arc = 1e-3 * surface.scale();

  // Edge anchors scan the inward half-plane; interior anchors scan a
  // half-turn of unoriented directions.
  double theta0 = 0.0;
  if (start.locus.is_on_edge()) {
    const Edge& e = surface.edge(start.locus.index);
    theta0 = angle_of(-e.outward) - kPi / 2;
  }

  auto run_range = [&](long long lo, long long hi, std::vector<BruteForceReturn>& sink) {
    for (long long i = lo; i < hi; ++i) {
      double theta = theta0 + kPi * (static_cast<double>(i) + 0.5) /
                                  static_cast<double>(direction_samples);
      GeodesicPath p;
      try {
        p = trace(surface, start, unit(theta), TraceLimits{max_length, 1 << 20});
      } catch (const Error&) {
        continue;
      }
      double traveled = 0.0;
      for (size_t k = 0; k < p.segments.size(); ++k) {
        const PathSegment& s = p.segments[k];
        bool sheet_ok = start.locus.is_on_edge() || s.sheet == start.sheet;
        double seg_len = distance(s.a, s.b);
        if (sheet_ok) {
          Vec2 ab = s.b - s.a;
          double t = seg_len > 0.0
                         ? std::clamp(dot(start.coords - s.a, ab) / ab.norm2(), 0.0, 1.0)
                         : 0.0;
          Vec2 closest = s.a + ab * t;
          double d = distance(closest, start.coords);
          double arc = traveled + t * seg_len;
          if (d < close_tol && arc > min_arc) {
            BruteForceReturn r;
            r.direction = theta;
            r.word.assign(p.word.begin(), p.word.begin() + static_cast<long>(k));
            r.length = arc;
            r.return_distance = d;
            sink.push_back(r);
            break;
          }
        }
        traveled += seg_len;
      }
    }
  };

  if (threads <= 1) {
    run_range(0, direction_samples, out);
    return out;
  }
  int nt = std::min<long long>(threads, direction_samples);
  std::vector<std::vector<BruteForceReturn>> parts(static_cast<size_t>(nt));
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t) {
    long long lo = direction_samples * t / nt;
    long long hi = direction_samples * (t + 1) / nt;
    pool.emplace_back([&, t, lo, hi] { run_range(lo, hi, parts[static_cast<size_t>(t)]); });
  }
  for (auto& th : pool) th.join();
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Figure-eight search on the doubled regular n-gon. Candidate loops at the
// midpoint of edge 0 are paired so that the four tangents balance (opposite
// tangents antipodal), each loop face carries an admissible turning angle
// with the matching cone count, and the assembled net verifies.
inline SearchReport search_figure8(const SearchConfig& config) {
  SearchReport report;
  report.config = config;
  report.exhaustive_up_to = config.max_word_length;

  LoopAngleSet angles = figure8_loop_angles(config.n);
  if (angles.entries.empty()) {
    report.notes.push_back("no admissible loop turning angle: every candidate is degenerate");
    return report;
  }

  Surface surface(PolygonSpec::regular(config.n, config.scale));
  SurfacePoint anchor = surface.edge_midpoint(0);
  int n = config.n;

  // Enumerate canonical words (quotient by the mirror stabilizer of edge 0).
  std::vector<std::vector<int>> words;
  detail::WordEnumerator enumerator(surface, anchor.coords, config.max_word_length,
                                    config.effective_max_length(), true);
  enumerator.enumerate([&](const std::vector<int>& w) { words.push_back(w); });
  report.candidates_examined = static_cast<long long>(words.size());

  // Solve each word on both departure sheets and in mirror image, keeping the
  // loop candidates whose face data matches an admissible (x, alpha) entry.
  auto admissible = [&](const detail::LoopCandidate& c) {
    for (const auto& [x, alpha_over_pi] : angles.entries)
      if (c.loop_x == x && std::abs(c.turning - alpha_over_pi.value() * kPi) <= 1e-9)
        return true;
    return false;
  };

  std::vector<std::vector<int>> variant_words;
  std::set<std::string> seen_words;
  for (const auto& w : words) {
    for (const auto& var : {w, mirror_word(w, n)}) {
      std::string key = detail::word_key(var, Sheet::Top);
      if (seen_words.insert(key).second) variant_words.push_back(var);
    }
  }

  std::vector<std::optional<detail::LoopCandidate>> solved(variant_words.size() * 2);
  auto solve_range = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      const auto& w = variant_words[i / 2];
      Sheet sheet = (i % 2 == 0) ? Sheet::Top : Sheet::Bottom;
      solved[i] = detail::solve_loop(surface, anchor, w, sheet);
    }
  };
  size_t total = solved.size();
  int nt = std::max(1, std::min<int>(config.threads, static_cast<int>(total)));
  if (nt <= 1) {
    solve_range(0, total);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
      size_t lo = total * static_cast<size_t>(t) / static_cast<size_t>(nt);
      size_t hi = total * static_cast<size_t>(t + 1) / static_cast<size_t>(nt);
      pool.emplace_back([&, lo, hi] { solve_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<detail::LoopCandidate> loops;
  for (auto& s : solved)
    if (s) loops.push_back(*s);

  // Pair loops: the second must continue the first smoothly through the
  // anchor on both legs.
  std::set<std::string> solution_keys;
  std::map<std::string, double> near_misses;
  for (size_t i = 0; i < loops.size(); ++i) {
    for (size_t j = i; j < loops.size(); ++j) {
      const auto& l1 = loops[i];
      const auto& l2 = loops[j];
      double defect = std::max(std::abs(signed_angle(l2.dep, -l1.arr)),
                               std::abs(signed_angle(l2.arr, -l1.dep)));
      bool both_admissible = admissible(l1) && admissible(l2);
      if (defect <= 1e-9 && both_admissible) {
        Net net = detail::assemble_figure8(surface, l1.path, l2.path);
        VerificationReport rep;
        try {
          rep = verify(net, surface);
        } catch (const Error&) {
          continue;
        }
        if (!rep.pass) continue;
        std::string key = detail::figure8_solution_key(config.n, l1.path, l2.path);
        if (solution_keys.insert(key).second) report.solutions.push_back(net);
      } else if (config.report_near_misses && both_admissible && defect > 1e-9 &&
                 defect <= config.near_miss_tolerance) {
        std::string key = detail::word_key(l1.word, l1.depart_sheet);
        auto it = near_misses.find(key);
        if (it == near_misses.end() || defect < it->second) near_misses[key] = defect;
      }
    }
  }
  for (const auto& [key, defect] : near_misses) {
    NearMiss nm;
    nm.angle_defect = defect;
    std::stringstream ss(key);
    std::string tok;
    std::getline(ss, tok, ':'); // sheet tag
    while (std::getline(ss, tok, ':')) nm.word.push_back(std::stoi(tok));
    report.near_misses.push_back(nm);
  }

  std::sort(report.solutions.begin(), report.solutions.end(), [](const Net& a, const Net& b) {
    return a.edges[0].path.word < b.edges[0].path.word;
  });
  if (report.solutions.empty())
    report.notes.push_back("no figure-eight found up to the word-length bound; "
                           "the bound is not a non-existence proof");
  return report;
}

// Bifocal search. Loop faces need y = 1, turning pi/3 and x = 5n/12 enclosed
// cones; candidate loops are anchored at edge midpoints and at points of the
// polygon's mirror axes. The midpoint reduction is only justified for closed
// geodesics, so both anchor families are heuristic and a negative result is
// inconclusive.
inline SearchReport search_bifocal(const SearchConfig& config) {
  SearchReport report;
  report.config = config;
  report.exhaustive_up_to = config.max_word_length;
  BifocalAdmissibility adm = bifocal_admissible(config.n);
  if (!adm.admissible) {
    report.notes.push_back("not admissible: 12 does not divide n");
    return report;
  }
  report.notes.push_back("anchoring is heuristic for bifocal loops; "
                         "an empty result is inconclusive");

  Surface surface(PolygonSpec::regular(config.n, config.scale));
  int n = config.n;
  double tol = 1e-9 * surface.scale();

  // Stage A: loops anchored at the midpoint of edge 0.
  SurfacePoint anchor = surface.edge_midpoint(0);
  std::vector<std::vector<int>> words;
  detail::WordEnumerator enumerator(surface, anchor.coords, config.max_word_length,
                                    config.effective_max_length(), true);
  enumerator.enumerate([&](const std::vector<int>& w) { words.push_back(w); });
  report.candidates_examined = static_cast<long long>(words.size());

  std::vector<detail::LoopCandidate> loops;
  for (const auto& w : words) {
    for (const auto& var : {w, mirror_word(w, n)}) {
      for (Sheet sheet : {Sheet::Top, Sheet::Bottom}) {
        auto cand = detail::solve_loop(surface, anchor, var, sheet);
        if (!cand) continue;
        if (cand->loop_x != adm.loop_x) continue;
        if (std::abs(cand->turning - kPi / 3) > 1e-9) continue;
        loops.push_back(*cand);
      }
    }
  }

  std::set<std::string> solution_keys;
  for (const auto& l1 : loops) {
    Vec2 sum = l1.dep + l1.arr;
    if (std::abs(sum.norm() - 1.0) > 1e-9) continue;
    Vec2 t_c = -sum.normalized();
    // Convert the disk-chart connector tangent to a traceable direction.
    const Edge& e0 = surface.edge(0);
    Sheet conn_sheet = Sheet::Top;
    Vec2 conn_dir = t_c;
    if (dot(t_c, e0.outward) > 0.0) {
      conn_sheet = Sheet::Bottom;
      conn_dir = reflect_dir(t_c, e0.dir);
    }
    SurfacePoint conn_start = anchor;
    conn_start.sheet = conn_sheet;
    GeodesicPath conn_full;
    try {
      conn_full = trace(surface, conn_start, conn_dir,
                        TraceLimits{config.effective_max_length(), config.max_word_length});
    } catch (const Error&) {
      continue;
    }
    double traveled = 0.0;
    for (size_t k = 0; k < conn_full.crossings.size(); ++k) {
      traveled += distance(conn_full.segments[k].a, conn_full.segments[k].b);
      const Crossing& cr = conn_full.crossings[k];
      if (std::abs(cr.param - 0.5) > 1e-9) continue;
      int j = cr.edge;
      SurfacePoint anchor2 = surface.edge_midpoint(j);
      GeodesicPath connector;
      try {
        connector = trace(surface, conn_start, conn_dir,
                          TraceLimits{traveled, static_cast<int>(k)});
      } catch (const Error&) {
        continue;
      }
      if (distance(connector.end.coords, anchor2.coords) > tol) continue;
      Vec2 t_c_end = detail::vertex_chart_tangent(surface, anchor2,
                                                  connector.segments.back().sheet,
                                                  -connector.end_dir);
      // Loop words at M_j: rotations and reflections of the M_0 candidates.
      for (const auto& l1w : {l1.word, mirror_word(l1.word, n)}) {
        std::vector<int> rotated;
        for (int e : l1w) rotated.push_back((e + j) % n);
        for (Sheet sheet : {Sheet::Top, Sheet::Bottom}) {
          auto l2 = detail::solve_loop(surface, anchor2, rotated, sheet);
          if (!l2) continue;
          if (l2->loop_x != adm.loop_x || std::abs(l2->turning - kPi / 3) > 1e-9) continue;
          Vec2 sum2 = l2->dep + l2->arr;
          if (distance(sum2, -t_c_end) > 1e-9) continue;
          Net net;
          net.surface_spec = surface.spec();
          net.graph_type = GraphType::Bifocal;
          net.vertices.push_back(anchor);
          net.vertices.push_back(anchor2);
          net.edges.push_back({0, 0, l1.path});
          net.edges.push_back({1, 1, l2->path});
          net.edges.push_back({0, 1, connector});
          VerificationReport rep;
          try {
            rep = verify(net, surface);
          } catch (const Error&) {
            continue;
          }
          if (!rep.pass) continue;
          std::string key = detail::word_key(l1.word, l1.depart_sheet) + "|" +
                            detail::word_key(rotated, sheet) + "|" + std::to_string(j);
          if (solution_keys.insert(key).second) report.solutions.push_back(net);
        }
      }
    }
  }

  // Stage B: loops anchored on a mirror axis, interior to the top sheet, with
  // the connecting edge along the axis through the center. One shooting
  // parameter (the anchor radius) enforces the degree-3 balance.
  for (double axis_angle : {0.0, kPi / n}) {
    Vec2 axis = unit(axis_angle);
    double rho = apothem(n, config.scale);
    auto balance_gap = [&](const std::vector<int>& w, double t) -> std::optional<double> {
      SurfacePoint p;
      try {
        p = surface.point(Sheet::Top, axis * t);
      } catch (const Error&) {
        return std::nullopt;
      }
      if (!p.locus.is_interior()) return std::nullopt;
      auto cand = detail::solve_loop(surface, p, w, Sheet::Top);
      if (!cand) return std::nullopt;
      Vec2 sum = cand->dep + cand->arr;
      // Want sum == +axis so the connector can leave toward the center.
      return wrap_pi(angle_of(sum) - axis_angle);
    };

    std::set<std::vector<int>> axis_words;
    for (double frac : {0.25, 0.45, 0.65, 0.85}) {
      SurfacePoint p;
      try {
        p = surface.point(Sheet::Top, axis * (rho * frac));
      } catch (const Error&) {
        continue;
      }
      detail::WordEnumerator we(surface, p.coords, std::min(config.max_word_length, 12),
                                config.effective_max_length(), false);
      we.enumerate([&](const std::vector<int>& w) {
        if (w.size() % 2 == 0) axis_words.insert(w);
      });
    }
    for (const auto& w : axis_words) {
      auto cand0 = detail::solve_loop(surface, surface.point(Sheet::Top, axis * (rho * 0.5)), w,
                                      Sheet::Top);
      if (cand0 && (cand0->loop_x != adm.loop_x || std::abs(cand0->turning - kPi / 3) > 1e-3))
        continue; // wrong face data everywhere on the family
      const int grid = 48;
      double prev_t = -1.0;
      std::optional<double> prev_gap;
      for (int g = 1; g <= grid; ++g) {
        double t = rho * (0.02 + 0.96 * g / (grid + 1.0));
        auto gap = balance_gap(w, t);
        if (prev_gap && gap && *prev_gap * *gap < 0.0 && std::abs(*prev_gap) < 1.0 &&
            std::abs(*gap) < 1.0) {
          double lo = prev_t, hi = t;
          double glo = *prev_gap;
          for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (lo + hi);
            auto gm = balance_gap(w, mid);
            if (!gm) break;
            if (*gm * glo <= 0.0) {
              hi = mid;
            } else {
              lo = mid;
              glo = *gm;
            }
          }
          double t_star = 0.5 * (lo + hi);
          SurfacePoint w1 = surface.point(Sheet::Top, axis * t_star);
          auto l1 = detail::solve_loop(surface, w1, w, Sheet::Top);
          if (l1 && l1->loop_x == adm.loop_x && std::abs(l1->turning - kPi / 3) <= 1e-7) {
            SurfacePoint w2 = surface.point(Sheet::Top, axis * (-t_star));
            std::vector<int> w2word;
            for (int e : w) w2word.push_back((e + n / 2) % n);
            auto l2 = detail::solve_loop(surface, w2, w2word, Sheet::Top);
            if (l2) {
              GeodesicPath connector;
              try {
                connector = trace(surface, w1, -axis, TraceLimits{2.0 * t_star, 0});
                Net net;
                net.surface_spec = surface.spec();
                net.graph_type = GraphType::Bifocal;
                net.vertices.push_back(w1);
                net.vertices.push_back(w2);
                net.edges.push_back({0, 0, l1->path});
                net.edges.push_back({1, 1, l2->path});
                net.edges.push_back({0, 1, connector});
                VerificationReport rep = verify(net, surface);
                if (rep.pass) {
                  std::string key = "axis|" + detail::word_key(w, Sheet::Top) + "|" +
                                    std::to_string(axis_angle) + "|" + std::to_string(t_star);
                  if (solution_keys.insert(key).second) report.solutions.push_back(net);
                }
              } catch (const Error&) {
              }
            }
          }
        }
        prev_t = t;
        prev_gap = gap;
      }
    }
  }

  if (report.solutions.empty())
    report.notes.push_back("no bifocal found: inconclusive for the open existence question");
  return report;
}

inline SearchReport run_search(const SearchConfig& config) {
  return config.target == SearchTarget::Figure8 ? search_figure8(config)
                                                : search_bifocal(config);
}

} // namespace netlab
