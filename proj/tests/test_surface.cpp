#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "netlab/surface.hpp"

using namespace netlab;

TEST_CASE("regular triangle cone data") {
  Surface s(PolygonSpec::regular(3, 1.0));
  REQUIRE(s.cone_points().size() == 3);
  for (const ConePoint& c : s.cone_points()) {
    CHECK(c.curvature == doctest::Approx(4.0 * kPi / 3).epsilon(1e-15));
    CHECK(c.curvature == doctest::Approx(2.0 * kPi - 2.0 * c.interior_angle).epsilon(1e-14));
  }
  CHECK(std::abs(s.total_curvature() - 4.0 * kPi) < 1e-10);
  // Vertex 0 sits at angle zero on the circumcircle.
  CHECK(s.vertices()[0].x == doctest::Approx(1.0));
  CHECK(s.vertices()[0].y == doctest::Approx(0.0));
}

TEST_CASE("equilateral triangle matches the regular 3-gon up to similarity") {
  Surface reg(PolygonSpec::regular(3, 1.0));
  Surface tri(PolygonSpec::triangle(kPi / 3, kPi / 3, kPi / 3, 2.0));
  for (int i = 0; i < 3; ++i) {
    CHECK(tri.cone(i).curvature == doctest::Approx(reg.cone(i).curvature).epsilon(1e-14));
    CHECK(tri.cone(i).interior_angle == doctest::Approx(kPi / 3).epsilon(1e-14));
  }
  // Side ratios are similarity-invariant: all edges equal.
  CHECK(tri.edge(0).length == doctest::Approx(tri.edge(1).length));
  CHECK(tri.edge(1).length == doctest::Approx(tri.edge(2).length));
}

TEST_CASE("30-30-120 triangle curvatures") {
  Surface s(PolygonSpec::triangle(kPi / 6, kPi / 6, 2 * kPi / 3, 1.0));
  std::vector<double> curv;
  for (const ConePoint& c : s.cone_points()) curv.push_back(c.curvature);
  std::sort(curv.begin(), curv.end());
  CHECK(curv[0] == doctest::Approx(2.0 * kPi / 3).epsilon(1e-13));
  CHECK(curv[1] == doctest::Approx(5.0 * kPi / 3).epsilon(1e-13));
  CHECK(curv[2] == doctest::Approx(5.0 * kPi / 3).epsilon(1e-13));
  CHECK(std::abs(s.total_curvature() - 4.0 * kPi) < 1e-10);
  // The longest side lies on the positive x-axis starting at the origin.
  CHECK(s.vertices()[0].x == doctest::Approx(0.0));
  CHECK(s.vertices()[0].y == doctest::Approx(0.0));
  CHECK(s.vertices()[1].x == doctest::Approx(1.0));
  CHECK(s.vertices()[1].y == doctest::Approx(0.0));
  CHECK(s.vertices()[2].y > 0.0);
}

TEST_CASE("point classification") {
  Surface s(PolygonSpec::regular(3, 1.0));
  CHECK(s.classify(s.centroid()).is_interior());
  Locus mid = s.classify(s.edge(0).midpoint());
  CHECK(mid.is_on_edge());
  CHECK(mid.index == 0);
  CHECK(mid.param == doctest::Approx(0.5).epsilon(1e-14));
  Locus cone = s.classify(s.vertices()[0]);
  CHECK(cone.is_at_cone());
  CHECK(cone.index == 0);
  CHECK_THROWS_AS((void)s.classify({2.0, 2.0}), Error);
}

TEST_CASE("edge midpoints of the regular triangle are pairwise equidistant") {
  Surface s(PolygonSpec::regular(3, 1.0));
  Vec2 m0 = s.edge_midpoint(0).coords;
  Vec2 m1 = s.edge_midpoint(1).coords;
  Vec2 m2 = s.edge_midpoint(2).coords;
  CHECK(distance(m0, m1) == doctest::Approx(distance(m1, m2)).epsilon(1e-14));
  CHECK(distance(m1, m2) == doctest::Approx(distance(m2, m0)).epsilon(1e-14));
}

TEST_CASE("figure-eight base point of the 30-30-120 triangle") {
  // The edge between the two 30-degree vertices is the longest side, which
  // the canonical placement puts on the x-axis as edge 0.
  Surface s(PolygonSpec::triangle(kPi / 6, kPi / 6, 2 * kPi / 3, 1.0));
  CHECK(s.cone(0).interior_angle == doctest::Approx(kPi / 6));
  CHECK(s.cone(1).interior_angle == doctest::Approx(kPi / 6));
  SurfacePoint m = s.edge_midpoint(0);
  CHECK(m.coords.x == doctest::Approx(0.5));
  CHECK(m.coords.y == doctest::Approx(0.0));
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(Surface(PolygonSpec::regular(2, 1.0)), Error);
  CHECK_THROWS_AS(Surface(PolygonSpec::regular(5, -1.0)), Error);
  CHECK_THROWS_AS(Surface(PolygonSpec::triangle(1.0, 1.0, 1.0)), Error);
  CHECK_THROWS_AS(Surface(PolygonSpec::triangle(kPi, kPi / 2, -kPi / 2)), Error);
}

TEST_CASE("total curvature is 4*pi for random specs") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> pick_n(3, 60);
  std::uniform_real_distribution<double> pick_scale(0.01, 100.0);
  std::uniform_real_distribution<double> pick_angle(0.05, kPi - 0.1);
  for (int i = 0; i < 1200; ++i) {
    if (i % 2 == 0) {
      Surface s(PolygonSpec::regular(pick_n(rng), pick_scale(rng)));
      CHECK(std::abs(s.total_curvature() - 4.0 * kPi) < 1e-10);
      for (const ConePoint& c : s.cone_points())
        CHECK(c.curvature == doctest::Approx(4.0 * kPi / s.spec().n).epsilon(1e-15));
    } else {
      double a = pick_angle(rng);
      double b = std::uniform_real_distribution<double>(0.05, kPi - a - 0.05)(rng);
      double c = kPi - a - b;
      if (c <= 0.05) continue;
      Surface s(PolygonSpec::triangle(a, b, c, pick_scale(rng)));
      CHECK(std::abs(s.total_curvature() - 4.0 * kPi) < 1e-10);
    }
  }
}

TEST_CASE("edge identification is an involution") {
  Surface s(PolygonSpec::regular(5, 2.0));
  SurfacePoint p = s.edge_midpoint(2);
  SurfacePoint q{other(p.sheet), p.coords, p.locus};
  SurfacePoint r{other(q.sheet), q.coords, q.locus};
  CHECK(r.sheet == p.sheet);
  CHECK(same_surface_point(p, q, 1e-12));
  CHECK(same_surface_point(p, r, 1e-12));
}
