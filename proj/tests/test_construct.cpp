#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>

#include "netlab/admissibility.hpp"
#include "netlab/construct.hpp"

using namespace netlab;

namespace {

VerificationReport verified(const Net& net) {
  Surface s(net.surface_spec);
  VerificationReport rep = verify(net, s);
  CHECK(rep.pass);
  CHECK(rep.euler_ok);
  return rep;
}

// Face (x, y) data of a verified net must appear among the exact solutions
// for its polygon (degree-3 vertices only).
void check_budgets_admissible(const Net& net, const VerificationReport& rep) {
  if (net.surface_spec.kind != PolygonSpec::Kind::Regular) return;
  auto sols = solve_3regular(net.surface_spec.n).solutions;
  for (const FaceBudget& f : rep.faces) {
    bool listed = std::count(sols.begin(), sols.end(), std::make_pair(f.x, f.y)) == 1;
    bool degenerate = (f.y == 6 && f.x == 0);
    CHECK((listed || degenerate));
  }
}

} // namespace

TEST_CASE("theta nets on 3k-gons") {
  for (int n : {3, 6, 9, 12}) {
    Net net = construct_theta_regular(n);
    VerificationReport rep = verified(net);
    CHECK(rep.V == 2);
    CHECK(rep.E == 3);
    CHECK(rep.F == 3);
    for (const FaceBudget& f : rep.faces) {
      CHECK(f.x == n / 3);
      CHECK(f.y == 2);
    }
    check_budgets_admissible(net, rep);
    CHECK(classify_partition(net, rep) == PartitionType::Theta);
  }
  CHECK_THROWS_AS(construct_theta_regular(4), Error);
}

TEST_CASE("theta edge lengths and tangent angles on the triangle") {
  // Closed-form oracle: apothem cos(pi/3) = 1/2 at circumradius 1, so every
  // edge is one unit long and the three launch angles are 2*pi/3 apart.
  Net net = construct_theta_regular(3);
  for (const NetEdge& e : net.edges)
    CHECK(e.path.length == doctest::Approx(1.0).epsilon(1e-14));
  for (int k = 0; k < 3; ++k) {
    double a1 = angle_of(net.edges[static_cast<size_t>(k)].path.start_dir);
    double a2 = angle_of(net.edges[static_cast<size_t>((k + 1) % 3)].path.start_dir);
    CHECK(std::abs(wrap_pi(a2 - a1 - 2 * kPi / 3)) < 1e-13);
  }
}

TEST_CASE("tetrahedral nets on 4m-gons") {
  for (int n : {4, 8, 12}) {
    Net net = construct_3regular_4n(n);
    VerificationReport rep = verified(net);
    CHECK(rep.V == 4);
    CHECK(rep.E == 6);
    CHECK(rep.F == 4);
    for (const FaceBudget& f : rep.faces) {
      CHECK(f.x == n / 4);
      CHECK(f.y == 3);
    }
    check_budgets_admissible(net, rep);
    // All boundary crossings at edge midpoints.
    for (const NetEdge& e : net.edges)
      for (const Crossing& c : e.path.crossings)
        CHECK(c.param == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK_THROWS_AS(construct_3regular_4n(6), Error);
}

TEST_CASE("tetrahedral vertex radius against a bisection oracle") {
  // Independent oracle: place the first vertex at radius r on its diagonal
  // axis and bisect the axial component of the three unit tangents to zero.
  int n = 4;
  double rho = apothem(n, 1.0);
  double beta = kPi / n;
  Vec2 axis = unit(beta + kPi / 4);
  Vec2 m_a = unit(beta) * rho;
  Vec2 m_b = unit(beta + kPi / 2) * rho;
  auto axial = [&](double r) {
    Vec2 t1 = (m_a - axis * r).normalized();
    Vec2 t2 = (m_b - axis * r).normalized();
    return dot(t1 + t2 - axis, axis); // the chord tangent contributes -axis
  };
  double lo = 0.0, hi = rho;
  REQUIRE(axial(lo) > 0.0);
  REQUIRE(axial(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (axial(mid) > 0.0 ? lo : hi) = mid;
  }
  double r_oracle = 0.5 * (lo + hi);
  Net net = construct_3regular_4n(4);
  double r_built = net.vertices[0].coords.norm();
  CHECK(r_built == doctest::Approx(r_oracle).epsilon(1e-12));
  // Degree-3 angles all 2*pi/3 at the first vertex.
  std::vector<Vec2> dirs;
  for (const NetEdge& e : net.edges) {
    if (e.a == 0) dirs.push_back(e.path.start_dir);
    if (e.b == 0) dirs.push_back(-e.path.end_dir);
  }
  REQUIRE(dirs.size() == 3);
  CHECK(balancing_defect(dirs) < 1e-14);
}

TEST_CASE("figure-eights on odd-gons") {
  for (int n : {3, 5, 7, 9}) {
    Net net = construct_figure8_odd(n);
    VerificationReport rep = verified(net);
    CHECK(rep.V == 1);
    CHECK(rep.E == 2);
    CHECK(rep.F == 3);
    CHECK(classify_partition(net, rep) == PartitionType::FigureEight);
    // Each lobe crosses its far edge perpendicularly.
    for (const NetEdge& e : net.edges) {
      REQUIRE(e.path.crossings.size() == 1);
      CHECK(e.path.crossings[0].perpendicular);
    }
    // Loop faces carry the admissible turning angle 2*pi/n with (n-1)/2
    // cones; the outer face encloses exactly one.
    LoopAngleSet angles = figure8_loop_angles(n);
    int loops_seen = 0;
    for (const FaceBudget& f : rep.faces) {
      if (f.y == 1) {
        ++loops_seen;
        CHECK(f.x == (n - 1) / 2);
        REQUIRE(f.turning_angles.size() == 1);
        bool admissible = false;
        for (auto& [x, a] : angles.entries)
          admissible = admissible ||
                       (x == f.x && std::abs(f.turning_angles[0] - a.value() * kPi) < 1e-9);
        CHECK(admissible);
      } else {
        CHECK(f.x == 1);
        CHECK(f.y == 2);
      }
    }
    CHECK(loops_seen == 2);
  }
  try {
    construct_figure8_odd(4);
    FAIL("expected NotOdd");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOdd);
  }
}

TEST_CASE("figure-eights on isosceles triangles") {
  for (auto [a, b, c] : std::vector<std::array<double, 3>>{
           {60.0, 60.0, 60.0}, {30.0, 30.0, 120.0}, {70.0, 70.0, 40.0}}) {
    Net net = construct_figure8_isosceles(a * kPi / 180, b * kPi / 180, c * kPi / 180);
    VerificationReport rep = verified(net);
    CHECK(rep.F == 3);
    // The two lobes enclose equal curvature.
    std::vector<double> lobe_curv;
    for (const FaceBudget& f : rep.faces)
      if (f.y == 1) lobe_curv.push_back(f.cone_curvature);
    REQUIRE(lobe_curv.size() == 2);
    CHECK(lobe_curv[0] == doctest::Approx(lobe_curv[1]).epsilon(1e-8));
  }
  CHECK_THROWS_AS(construct_figure8_isosceles(0.9, 1.0, kPi - 1.9), Error);
}

TEST_CASE("equilateral isosceles figure-eight matches the odd-gon construction") {
  Net tri = construct_figure8_isosceles(kPi / 3, kPi / 3, kPi / 3, 2.0 * std::sin(kPi / 3));
  Net reg = construct_figure8_odd(3, 1.0);
  // Same side length (scale chosen to match), so lobe lengths agree.
  std::vector<double> lt, lr;
  for (const NetEdge& e : tri.edges) lt.push_back(e.path.length);
  for (const NetEdge& e : reg.edges) lr.push_back(e.path.length);
  std::sort(lt.begin(), lt.end());
  std::sort(lr.begin(), lr.end());
  CHECK(lt[0] == doctest::Approx(lr[0]).epsilon(1e-12));
  CHECK(lt[1] == doctest::Approx(lr[1]).epsilon(1e-12));
}

TEST_CASE("bifocal on the doubled 30-30-120 triangle") {
  Net net = construct_bifocal_30_30_120();
  VerificationReport rep = verified(net);
  CHECK(rep.V == 2);
  CHECK(rep.E == 3);
  CHECK(rep.F == 3);
  CHECK(classify_partition(net, rep) == PartitionType::Bifocal);
  int lobes = 0;
  for (const FaceBudget& f : rep.faces) {
    if (f.y == 1) {
      ++lobes;
      CHECK(f.cone_curvature == doctest::Approx(5 * kPi / 3).epsilon(1e-12));
      REQUIRE(f.turning_angles.size() == 1);
      CHECK(f.turning_angles[0] == doctest::Approx(kPi / 3).epsilon(1e-12));
    } else {
      // The outer face holds the 2*pi/3 of the apex with four pi/3 turns.
      CHECK(f.cone_curvature == doctest::Approx(2 * kPi / 3).epsilon(1e-12));
      CHECK(f.y == 4);
    }
    CHECK(std::abs(f.residual) <= 1e-8);
  }
  CHECK(lobes == 2);
}

TEST_CASE("bifocal anchor pinned by the leg midpoint, found by shooting") {
  // Oracle: bisect the anchor position d on the base so that the lobe's
  // perpendicular foot lands at the midpoint of the leg. The closed form is
  // d = c/3.
  Surface s(PolygonSpec::triangle(kPi / 6, kPi / 6, 2 * kPi / 3, 1.0));
  const Edge& leg = s.edge(2);
  Vec2 leg_mid = leg.midpoint();
  auto foot_gap = [&](double d) {
    Vec2 w{d, 0.0};
    double dist = leg.offset - dot(w, leg.outward);
    Vec2 foot = w + leg.outward * dist;
    return dot(foot - leg_mid, leg.dir);
  };
  double lo = 0.05, hi = 0.49;
  REQUIRE(foot_gap(lo) * foot_gap(hi) < 0.0);
  double glo = foot_gap(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (foot_gap(mid) * glo > 0.0) {
      lo = mid;
      glo = foot_gap(mid);
    } else {
      hi = mid;
    }
  }
  double d_oracle = 0.5 * (lo + hi);
  CHECK(d_oracle == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  Net net = construct_bifocal_30_30_120();
  CHECK(net.vertices[0].coords.x == doctest::Approx(d_oracle).epsilon(1e-12));
  // The lobes cross the legs exactly at their midpoints.
  CHECK(net.edges[0].path.crossings[0].param == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(net.edges[1].path.crossings[0].param == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("figure-eight on the doubled hexagon") {
  Net net = construct_figure8_hexagon();
  VerificationReport rep = verified(net);
  CHECK(rep.F == 3);
  CHECK(classify_partition(net, rep) == PartitionType::FigureEight);
  int lobes = 0;
  for (const FaceBudget& f : rep.faces) {
    if (f.y == 1) {
      ++lobes;
      CHECK(f.x == 2);
      CHECK(f.turning_angles[0] == doctest::Approx(2 * kPi / 3).epsilon(1e-12));
    }
  }
  CHECK(lobes == 2);
  // Mirror symmetry exchanging the two lobes: equal lengths, mirrored words.
  CHECK(net.edges[0].path.length == doctest::Approx(net.edges[1].path.length).epsilon(1e-14));
  std::vector<int> m = mirror_word(net.edges[0].path.word, 6);
  std::reverse(m.begin(), m.end());
  CHECK(net.edges[1].path.word == m);
}

TEST_CASE("corner cutting re-embeds midpoint-crossing nets") {
  // Theta on 3 extends to the theta on 6.
  Net t3 = construct_theta_regular(3);
  Net t6 = corner_cut_extend(t3, 3, 6);
  VerificationReport rep6 = verified(t6);
  Net ref = construct_theta_regular(6);
  // Same crossing set and same lengths as the direct construction.
  std::set<int> crossed, crossed_ref;
  for (const NetEdge& e : t6.edges) {
    CHECK(e.path.length == doctest::Approx(2.0 * apothem(6, 1.0)).epsilon(1e-12));
    for (const Crossing& c : e.path.crossings) crossed.insert(c.edge);
  }
  for (const NetEdge& e : ref.edges)
    for (const Crossing& c : e.path.crossings) crossed_ref.insert(c.edge);
  CHECK(crossed == crossed_ref);
  for (const FaceBudget& f : rep6.faces) CHECK(f.x == 2);

  // Tetrahedral net on 4 extends to 8.
  Net q4 = construct_3regular_4n(4);
  Net q8 = corner_cut_extend(q4, 4, 8);
  VerificationReport rep8 = verified(q8);
  for (const FaceBudget& f : rep8.faces) {
    CHECK(f.x == 2);
    CHECK(f.y == 3);
  }

  // The hexagon figure-eight crosses away from midpoints and cannot extend.
  Net h = construct_figure8_hexagon();
  try {
    corner_cut_extend(h, 6, 12);
    FAIL("expected NotMidpointPerpendicular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMidpointPerpendicular);
  }
}
