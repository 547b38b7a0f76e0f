#pragma once

// Reproduction suite: every headline result gets one runnable check with its
// tolerances pinned in code. The acceptance binary and `netlab repro` both
// drive this table.

#include <chrono>
#include <random>

#include "netlab/io.hpp"
#include "netlab/render.hpp"

namespace netlab {

struct CriterionResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

namespace repro {

using Clock = std::chrono::steady_clock;

inline double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Checker {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += why;
    }
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

// Three-regular nets exist exactly on 3k- and 4k-gons; exact arithmetic
// against a direct enumeration oracle, n = 3..200.
inline CriterionResult criterion_three_regular_range() {
  auto t0 = Clock::now();
  Checker c;
  for (int n = 3; n <= 200; ++n) {
    Constraint3Regular sol = solve_3regular(n);
    std::vector<std::pair<int, int>> oracle;
    for (int y = 1; y <= 5; ++y)
      for (int x = 1; x <= 100; ++x)
        if (static_cast<long long>(n) * (6 - y) == 12LL * x) oracle.emplace_back(x, y);
    auto sorted = sol.solutions;
    std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return a.second < b.second; });
    std::sort(oracle.begin(), oracle.end(), [](auto a, auto b) { return a.second < b.second; });
    c.expect(sorted == oracle, "oracle mismatch at n=" + std::to_string(n));
    c.expect(!sol.solutions.empty() == (n % 3 == 0 || n % 4 == 0),
             "solvability mismatch at n=" + std::to_string(n));
  }
  double secs = elapsed(t0);
  c.expect(secs < 1.0, "exceeded 1 s");
  c.note("n=3..200 exact");
  return {"three-regular-3n-4n-gons", c.ok, secs, c.detail};
}

inline CriterionResult criterion_theta_bifocal_divisibility() {
  auto t0 = Clock::now();
  Checker c;
  for (int n = 3; n <= 200; ++n) {
    c.expect(theta_admissible(n).admissible == (n % 3 == 0),
             "theta mismatch at n=" + std::to_string(n));
    c.expect(bifocal_admissible(n).admissible == (n % 12 == 0),
             "bifocal mismatch at n=" + std::to_string(n));
  }
  BifocalAdmissibility b = bifocal_admissible(12);
  c.expect(b.loop_x == 5, "12-gon loop_x != 5");
  c.expect(b.outer_x == 2, "12-gon outer_x != 2");
  c.note("theta iff 3|n, bifocal iff 12|n; 12-gon loops enclose 5, outer 2");
  return {"theta-3n-and-bifocal-12n", c.ok, elapsed(t0), c.detail};
}

inline CriterionResult criterion_triangle_grid() {
  auto t0 = Clock::now();
  Checker c;
  int isosceles = 0;
  for (int a = 1; a <= 178; ++a) {
    for (int b = a; b <= 178; ++b) {
      int cc = 180 - a - b;
      if (cc < b) continue;
      TriangleClassification t =
          classify_triangle(a * kPi / 180, b * kPi / 180, cc * kPi / 180);
      c.expect(t.theta == (a == 60 && b == 60), "theta grid mismatch");
      c.expect(t.bifocal == (a == 30 && b == 30 && cc == 120), "bifocal grid mismatch");
      c.expect(t.figure8 == (a == b || b == cc), "figure8 grid mismatch");
      isosceles += t.figure8;
    }
  }
  double secs = elapsed(t0);
  c.expect(secs < 1.0, "exceeded 1 s");
  c.note("one-degree grid; theta only equilateral, bifocal only 30-30-120, figure8 iff isosceles (" +
         std::to_string(isosceles) + " isosceles triangles)");
  return {"triangle-classification-grid", c.ok, secs, c.detail};
}

inline CriterionResult criterion_construction_suite() {
  auto t0 = Clock::now();
  Checker c;
  auto check_net = [&](const Net& net, const std::string& label) {
    Surface s(net.surface_spec);
    try {
      VerificationReport rep = verify(net, s);
      c.expect(rep.pass, label + " failed verification: " + rep.failure);
      c.expect(rep.max_vertex_defect <= 1e-9 * s.scale(), label + " balance defect");
      c.expect(rep.max_residual <= 1e-8, label + " face residual");
      c.expect(rep.euler_ok, label + " Euler count");
    } catch (const Error& e) {
      c.expect(false, label + ": " + e.what());
    }
  };
  for (int n : {3, 6, 9, 12}) check_net(construct_theta_regular(n), "theta-" + std::to_string(n));
  for (int n : {4, 8, 12}) check_net(construct_3regular_4n(n), "tetra-" + std::to_string(n));
  for (int n : {3, 5, 7, 9}) check_net(construct_figure8_odd(n), "fig8-odd-" + std::to_string(n));
  check_net(construct_figure8_isosceles(kPi / 3, kPi / 3, kPi / 3), "fig8-iso-60-60-60");
  check_net(construct_figure8_isosceles(kPi / 6, kPi / 6, 2 * kPi / 3), "fig8-iso-30-30-120");
  check_net(construct_figure8_isosceles(70 * kPi / 180, 70 * kPi / 180, 40 * kPi / 180),
            "fig8-iso-70-70-40");
  check_net(construct_bifocal_30_30_120(), "bifocal-30-30-120");
  check_net(construct_figure8_hexagon(), "fig8-hexagon");
  double secs = elapsed(t0);
  c.expect(secs < 5.0, "exceeded 5 s");
  c.note("15 nets constructed and verified");
  return {"construction-suite", c.ok, secs, c.detail};
}

inline CriterionResult criterion_square_figure8_nonexistence() {
  auto t0 = Clock::now();
  Checker c;
  LoopAngleSet s4 = figure8_loop_angles(4);
  c.expect(s4.entries.empty(), "expected no admissible angle on the square");
  std::vector<Rational> degenerate;
  for (auto& [x, a] : s4.degenerate) degenerate.push_back(a);
  std::vector<Rational> expect = {Rational(2), Rational(1), Rational(0)};
  c.expect(degenerate == expect, "degenerate candidate set is not {2pi, pi, 0}");
  SearchConfig cfg;
  cfg.n = 4;
  SearchReport rep = search_figure8(cfg);
  c.expect(rep.candidates_examined == 0, "expected zero candidates");
  c.expect(rep.solutions.empty(), "expected zero solutions");
  c.note("candidate turning angles on the square are exactly {0, pi, 2pi}");
  return {"square-figure8-nonexistence", c.ok, elapsed(t0), c.detail};
}

inline CriterionResult criterion_hexagon_figure8(int max_word_length = 24) {
  auto t0 = Clock::now();
  Checker c;
  SearchConfig cfg;
  cfg.n = 6;
  cfg.max_word_length = max_word_length;
  cfg.threads = 1;
  SearchReport rep = search_figure8(cfg);
  c.expect(!rep.solutions.empty(), "no figure-eight found on the hexagon");
  for (const Net& net : rep.solutions) {
    Surface s(net.surface_spec);
    VerificationReport vr = verify(net, s);
    c.expect(vr.pass, "solution fails verification");
    int lobes = 0;
    for (const FaceBudget& f : vr.faces) {
      if (f.y != 1) continue;
      ++lobes;
      c.expect(std::abs(f.turning_angles[0] - 2 * kPi / 3) <= 1e-9, "lobe turning != 2pi/3");
      c.expect(f.x == 2, "lobe cone count != 2");
    }
    c.expect(lobes == 2, "expected two lobe faces");
  }
  double secs = elapsed(t0);
  c.expect(secs < 300.0, "exceeded 5 min single-threaded");
  c.note(std::to_string(rep.solutions.size()) + " solution(s) up to symmetry, " +
         std::to_string(rep.candidates_examined) + " words examined");
  return {"hexagon-figure8-existence", c.ok, secs, c.detail};
}

inline CriterionResult criterion_octagon_evidence(int threads, long long samples = 10000000,
                                                  int max_word_length = 24) {
  auto t0 = Clock::now();
  Checker c;
  LoopAngleSet s8 = figure8_loop_angles(8);
  c.expect(s8.entries.size() == 1 && s8.entries[0].first == 3 &&
               s8.entries[0].second == Rational(1, 2),
           "octagon angle set is not {(3, pi/2)}");

  SearchConfig cfg;
  cfg.n = 8;
  cfg.max_word_length = max_word_length;
  cfg.threads = threads;
  SearchReport rep = search_figure8(cfg);
  c.expect(rep.solutions.empty(), "word search found a figure-eight on the octagon");

  // Independent oracle: fan of traced directions from the anchor; every exact
  // near-return must be reproduced by the word-holonomy solver at the sampled
  // direction (and none of them is a figure-eight, or the search above would
  // have found it). A return within 1e-6 after length L needs the sample
  // within about 1e-6 / L of the exact direction, hence the fine fan.
  Surface surface(PolygonSpec::regular(8, 1.0));
  SurfacePoint anchor = surface.edge_midpoint(0);
  auto returns = brute_force_closed(surface, anchor, samples, cfg.effective_max_length(), threads);
  double grid = kPi / static_cast<double>(samples);
  // The chord of the exact representative through the anchor, for telling
  // genuine solutions apart from families whose representative runs into a
  // cone point (the sampled neighbor sneaks past it).
  auto chord_cone_distance = [&](const std::vector<int>& w) {
    Corridor cor = develop_word(surface, w);
    Vec2 p = anchor.coords;
    Vec2 target = cor.isometries.back().apply(p);
    double best = std::numeric_limits<double>::infinity();
    for (const Iso2& iso : cor.isometries)
      for (const Vec2& v : surface.vertices())
        best = std::min(best, point_segment_distance(iso.apply(v), p, target));
    return best;
  };
  long long checked = 0, matched = 0, singular = 0, unmatched = 0;
  std::set<std::string> words_seen;
  for (const BruteForceReturn& r : returns) {
    ++checked;
    std::vector<int> stripped = r.word;
    while (!stripped.empty() && stripped.back() == 0) stripped.pop_back();
    bool ok = false;
    for (const auto& w : {r.word, stripped}) {
      if (w.empty()) continue;
      auto sols = solve_closed(surface, w, 0);
      if (!sols.empty() &&
          std::abs(wrap_pi(angle_of(sols[0].path.start_dir) - r.direction)) <= 4.0 * grid) {
        ok = true;
        ++matched;
        words_seen.insert(detail::word_key(w, Sheet::Top));
        break;
      }
    }
    if (!ok && !r.word.empty() && chord_cone_distance(r.word) <= 1e-5 * surface.scale()) {
      ok = true; // representative through the anchor is blocked by a cone
      ++singular;
    }
    if (!ok) ++unmatched;
  }
  c.expect(checked > 0, "the sampling fan recorded no near-returns at all");
  c.expect(unmatched == 0,
           std::to_string(unmatched) + " of " + std::to_string(checked) +
               " sampled near-returns not reproduced by the solver");
  double secs = elapsed(t0);
  c.expect(secs < 1800.0, "exceeded 30 min");
  c.note("bounded search to word length " + std::to_string(max_word_length) +
         ": 0 solutions (evidence, not proof); " + std::to_string(checked) +
         " near-returns sampled: " + std::to_string(matched) + " match the solver across " +
         std::to_string(words_seen.size()) + " words, " + std::to_string(singular) +
         " are cone-blocked families");
  return {"octagon-figure8-bounded-search", c.ok, secs, c.detail};
}

inline CriterionResult criterion_oracle_agreement(int threads) {
  auto t0 = Clock::now();
  Checker c;
  // A lobe of length L only returns within 1e-6 when the sampled direction is
  // within 1e-6 / L of exact, so the fan must be much finer than the 1e-5
  // direction tolerance being certified.
  const long long samples = 8000000;
  const double dir_tol = 1e-5;
  auto check_lobe = [&](const Surface& s, const GeodesicPath& lobe,
                        const std::vector<BruteForceReturn>& returns, const std::string& label) {
    // The solver agrees with a fresh trace.
    auto sols = solve_closed(s, lobe.word, 0);
    c.expect(!sols.empty(), label + ": solver lost the lobe");
    if (!sols.empty()) {
      c.expect(distance(sols[0].path.end.coords, lobe.start.coords) <= 1e-9 * s.scale(),
               label + ": solver endpoint drifts");
      c.expect(std::abs(wrap_pi(angle_of(sols[0].path.start_dir) -
                                angle_of(lobe.start_dir))) <= 1e-9,
               label + ": solver direction drifts");
    }
    // The sampling oracle rediscovers the launch direction.
    double target = angle_of(lobe.start_dir);
    bool found = false;
    for (const BruteForceReturn& r : returns) {
      std::vector<int> w = r.word;
      while (!w.empty() && w.back() == lobe.start.locus.index) w.pop_back();
      if (w != lobe.word && r.word != lobe.word) continue;
      if (std::abs(wrap_pi(r.direction - target)) <= dir_tol) found = true;
    }
    c.expect(found, label + ": sampling oracle missed the lobe direction");
  };
  for (int n : {3, 5, 6}) {
    Surface s(PolygonSpec::regular(n, 1.0));
    SurfacePoint anchor = s.edge_midpoint(0);
    auto returns = brute_force_closed(s, anchor, samples, 4.5, threads);
    Net net = n == 6 ? construct_figure8_hexagon() : construct_figure8_odd(n);
    for (size_t i = 0; i < net.edges.size(); ++i)
      check_lobe(s, net.edges[i].path, returns,
                 "n=" + std::to_string(n) + " lobe " + std::to_string(i));
  }
  c.note("lobes of n=3,5,6 rediscovered by an 8e6-direction fan within 1e-5 rad");
  return {"closed-loop-oracle-agreement", c.ok, elapsed(t0), c.detail};
}

inline CriterionResult criterion_partition_enumeration() {
  auto t0 = Clock::now();
  Checker c;
  std::set<PartitionType> found = enumerate_three_face_partitions(4);
  std::set<PartitionType> expect = {PartitionType::Theta, PartitionType::FigureEight,
                                    PartitionType::Bifocal};
  c.expect(found == expect, "partition enumeration produced the wrong type set");
  double secs = elapsed(t0);
  c.expect(secs < 1.0, "exceeded 1 s");
  c.note("connected multigraphs, min degree 3, E = V + 1, V <= 4");
  return {"three-face-partition-enumeration", c.ok, secs, c.detail};
}

inline CriterionResult criterion_property_suites() {
  auto t0 = Clock::now();
  Checker c;
  std::mt19937 rng(1234321);
  std::uniform_real_distribution<double> angle01(0.0, kTwoPi);

  auto random_surface = [&]() {
    int n = 3 + static_cast<int>(rng() % 10);
    return Surface(PolygonSpec::regular(n, 1.0));
  };
  auto random_interior = [&](const Surface& s) {
    std::uniform_real_distribution<double> u(-s.scale(), s.scale());
    for (;;) {
      Vec2 p{u(rng), u(rng)};
      if (s.boundary_excess(p) < -1e-3 * s.scale()) return p;
    }
  };

  // Reversibility, sheet parity, development straightness.
  int reversibility_bad = 0, parity_bad = 0, straightness_bad = 0;
  for (int i = 0; i < 1100; ++i) {
    Surface s = random_surface();
    Vec2 p0 = random_interior(s);
    GeodesicPath fwd;
    try {
      fwd = trace(s, s.point(Sheet::Top, p0), unit(angle01(rng)), TraceLimits{4.0, 4096});
    } catch (const Error&) {
      --i;
      continue;
    }
    GeodesicPath back = trace(s, fwd.end, -fwd.end_dir, TraceLimits{fwd.length, 4096});
    std::vector<int> reversed(fwd.word.rbegin(), fwd.word.rend());
    if (distance(back.end.coords, p0) > 1e-9 * s.scale() || back.word != reversed)
      ++reversibility_bad;
    if ((fwd.word.size() % 2 == 0) != (fwd.end.sheet == Sheet::Top)) ++parity_bad;
    if (develop(s, fwd).max_deviation > 1e-9 * s.scale()) ++straightness_bad;
  }
  c.expect(reversibility_bad == 0, "reversibility failures");
  c.expect(parity_bad == 0, "sheet parity failures");
  c.expect(straightness_bad == 0, "development straightness failures");

  // Scaling invariance of verification.
  int scaling_bad = 0;
  std::uniform_real_distribution<double> logscale(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    double scale = std::pow(10.0, logscale(rng));
    int pick = static_cast<int>(rng() % 4);
    Net net;
    switch (pick) {
      case 0: net = construct_theta_regular(3 * (1 + static_cast<int>(rng() % 4)), scale); break;
      case 1: net = construct_3regular_4n(4 * (1 + static_cast<int>(rng() % 3)), scale); break;
      case 2: net = construct_figure8_odd(3 + 2 * static_cast<int>(rng() % 4), scale); break;
      default: net = construct_figure8_hexagon(scale); break;
    }
    Surface s(net.surface_spec);
    VerificationReport rep = verify(net, s, 1e-9 * scale);
    Net ref_net;
    switch (pick) {
      case 0: ref_net = construct_theta_regular(net.surface_spec.n, 1.0); break;
      case 1: ref_net = construct_3regular_4n(net.surface_spec.n, 1.0); break;
      case 2: ref_net = construct_figure8_odd(net.surface_spec.n, 1.0); break;
      default: ref_net = construct_figure8_hexagon(1.0); break;
    }
    Surface ref_s(ref_net.surface_spec);
    VerificationReport ref = verify(ref_net, ref_s, 1e-9);
    bool same = rep.pass == ref.pass && rep.F == ref.F;
    std::multiset<std::pair<int, int>> xa, xb;
    for (const FaceBudget& f : rep.faces) xa.insert({f.x, f.y});
    for (const FaceBudget& f : ref.faces) xb.insert({f.x, f.y});
    if (!(same && xa == xb)) ++scaling_bad;
  }
  c.expect(scaling_bad == 0, "scaling invariance failures");

  // Search determinism and monotonicity on small instances.
  int determinism_bad = 0, monotonic_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    SearchConfig cfg;
    cfg.n = 3 + static_cast<int>(rng() % 7);
    cfg.max_word_length = 2 + static_cast<int>(rng() % 4);
    cfg.max_length = 6.0;
    SearchReport r1 = search_figure8(cfg);
    SearchReport r2 = search_figure8(cfg);
    if (search_report_to_json(r1).dump() != search_report_to_json(r2).dump())
      ++determinism_bad;
    SearchConfig bigger = cfg;
    bigger.max_word_length = cfg.max_word_length + 1;
    SearchReport r3 = search_figure8(bigger);
    std::set<std::vector<int>> small_words, big_words;
    for (const Net& net : r1.solutions) small_words.insert(net.edges[0].path.word);
    for (const Net& net : r3.solutions) big_words.insert(net.edges[0].path.word);
    for (const auto& w : small_words)
      if (!big_words.count(w)) ++monotonic_bad;
  }
  c.expect(determinism_bad == 0, "search determinism failures");
  c.expect(monotonic_bad == 0, "search monotonicity failures");

  c.note("1100 trace triples, 1000 scaled nets, 1000 repeated searches");
  return {"randomized-invariant-suites", c.ok, elapsed(t0), c.detail};
}

} // namespace repro

// The full acceptance table. `quick` trims the octagon evidence run for
// interactive use; the acceptance gate runs everything.
inline std::vector<CriterionResult> run_acceptance(int threads, bool quick = false) {
  std::vector<CriterionResult> out;
  out.push_back(repro::criterion_three_regular_range());
  out.push_back(repro::criterion_theta_bifocal_divisibility());
  out.push_back(repro::criterion_triangle_grid());
  out.push_back(repro::criterion_construction_suite());
  out.push_back(repro::criterion_square_figure8_nonexistence());
  out.push_back(repro::criterion_hexagon_figure8(quick ? 12 : 24));
  // The shortest closed family on the octagon has length 4 cos(pi/8); the fan
  // must be fine enough for it to re-enter the 1e-6 return window.
  out.push_back(repro::criterion_octagon_evidence(threads, quick ? 6000000 : 20000000,
                                                  quick ? 12 : 24));
  out.push_back(repro::criterion_oracle_agreement(threads));
  out.push_back(repro::criterion_partition_enumeration());
  out.push_back(repro::criterion_property_suites());
  return out;
}

} // namespace netlab
