#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netlab/admissibility.hpp"

using namespace netlab;

namespace {

// Independent oracle: enumerate x directly instead of solving for it.
std::vector<std::pair<int, int>> oracle_3regular(int n, int x_max = 100) {
  std::vector<std::pair<int, int>> out;
  for (int y = 1; y <= 5; ++y)
    for (int x = 1; x <= x_max; ++x)
      if (static_cast<long long>(n) * (6 - y) == 12LL * x) out.emplace_back(x, y);
  std::sort(out.begin(), out.end(),
            [](auto a, auto b) { return a.second < b.second; });
  return out;
}

} // namespace

TEST_CASE("three-regular solutions for n = 12") {
  Constraint3Regular c = solve_3regular(12);
  std::vector<std::pair<int, int>> expect = {{5, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 5}};
  CHECK(c.solutions == expect);
  CHECK(c.degenerate_allowed);
}

TEST_CASE("n = 5 admits no three-regular net") {
  CHECK(solve_3regular(5).solutions.empty());
}

TEST_CASE("three-regular solvability matches the brute-force oracle for n in 3..200") {
  for (int n = 3; n <= 200; ++n) {
    Constraint3Regular c = solve_3regular(n);
    auto oracle = oracle_3regular(n);
    std::sort(c.solutions.begin(), c.solutions.end(),
              [](auto a, auto b) { return a.second < b.second; });
    CHECK(c.solutions == oracle);
    bool expected_nonempty = (n % 3 == 0) || (n % 4 == 0);
    CHECK(!c.solutions.empty() == expected_nonempty);
  }
}

TEST_CASE("theta admissibility") {
  CHECK(theta_admissible(3).admissible);
  CHECK(theta_admissible(3).x_per_face == 1);
  CHECK(theta_admissible(9).admissible);
  CHECK(theta_admissible(9).x_per_face == 3);
  CHECK(!theta_admissible(4).admissible);
  for (int n = 3; n <= 200; ++n) {
    ThetaAdmissibility t = theta_admissible(n);
    CHECK(t.admissible == (n % 3 == 0));
    if (t.admissible) {
      // The theta face (x, 2) appears among the three-regular solutions.
      auto sols = solve_3regular(n).solutions;
      CHECK(std::count(sols.begin(), sols.end(), std::make_pair(t.x_per_face, 2)) == 1);
    }
  }
}

TEST_CASE("bifocal admissibility") {
  BifocalAdmissibility b12 = bifocal_admissible(12);
  CHECK(b12.admissible);
  CHECK(b12.loop_x == 5);
  CHECK(b12.outer_x == 2);
  BifocalAdmissibility b24 = bifocal_admissible(24);
  CHECK(b24.admissible);
  CHECK(b24.loop_x == 10);
  CHECK(b24.outer_x == 4);
  CHECK(!bifocal_admissible(6).admissible);
  for (int n = 3; n <= 200; ++n) {
    BifocalAdmissibility b = bifocal_admissible(n);
    CHECK(b.admissible == (n % 12 == 0));
    if (b.admissible) {
      auto sols = solve_3regular(n).solutions;
      CHECK(std::count(sols.begin(), sols.end(), std::make_pair(b.loop_x, 1)) == 1);
    }
  }
}

TEST_CASE("figure-eight loop angles") {
  LoopAngleSet s4 = figure8_loop_angles(4);
  CHECK(s4.entries.empty());
  // The degenerate candidates are exactly alpha in {2pi, pi, 0}.
  REQUIRE(s4.degenerate.size() == 3);
  CHECK(s4.degenerate[0] == std::make_pair(0, Rational(2)));
  CHECK(s4.degenerate[1] == std::make_pair(1, Rational(1)));
  CHECK(s4.degenerate[2] == std::make_pair(2, Rational(0)));

  LoopAngleSet s6 = figure8_loop_angles(6);
  REQUIRE(s6.entries.size() == 1);
  CHECK(s6.entries[0].first == 2);
  CHECK(s6.entries[0].second == Rational(2, 3));
  CHECK(s6.entries[0].second.str() == "2/3");

  LoopAngleSet s8 = figure8_loop_angles(8);
  REQUIRE(s8.entries.size() == 1);
  CHECK(s8.entries[0].first == 3);
  CHECK(s8.entries[0].second == Rational(1, 2));

  LoopAngleSet s3 = figure8_loop_angles(3);
  REQUIRE(s3.entries.size() == 1);
  CHECK(s3.entries[0] == std::make_pair(1, Rational(2, 3)));

  // Every entry satisfies alpha = 2 - 4x/n exactly, 0 < alpha < pi.
  for (int n = 3; n <= 64; ++n) {
    for (auto& [x, a] : figure8_loop_angles(n).entries) {
      CHECK(a == Rational(2) - Rational(4 * x, n));
      CHECK(Rational(0) < a);
      CHECK(a < Rational(1));
    }
  }
}

TEST_CASE("triangle classification") {
  auto deg = [](double a, double b, double c) {
    return classify_triangle(a * kPi / 180, b * kPi / 180, c * kPi / 180);
  };
  TriangleClassification eq = deg(60, 60, 60);
  CHECK(eq.theta);
  CHECK(!eq.bifocal);
  CHECK(eq.figure8);

  TriangleClassification iso30 = deg(30, 30, 120);
  CHECK(!iso30.theta);
  CHECK(iso30.bifocal);
  CHECK(iso30.figure8);

  TriangleClassification scalene = deg(50, 60, 70);
  CHECK(!scalene.theta);
  CHECK(!scalene.bifocal);
  CHECK(!scalene.figure8);

  CHECK(deg(120, 30, 30).bifocal); // order-insensitive
  CHECK_THROWS_AS(classify_triangle(1.0, 1.0, 1.0), Error);
}

TEST_CASE("triangle classification over the one-degree grid") {
  int thetas = 0, bifocals = 0, figure8s = 0;
  for (int a = 1; a <= 178; ++a) {
    for (int b = a; b <= 178; ++b) {
      int c = 180 - a - b;
      if (c < b) continue;
      TriangleClassification t =
          classify_triangle(a * kPi / 180, b * kPi / 180, c * kPi / 180);
      bool is_iso = (a == b) || (b == c);
      CHECK(t.figure8 == is_iso);
      CHECK(t.theta == (a == 60 && b == 60 && c == 60));
      CHECK(t.bifocal == (a == 30 && b == 30 && c == 120));
      thetas += t.theta;
      bifocals += t.bifocal;
      figure8s += t.figure8;
    }
  }
  CHECK(thetas == 1);
  CHECK(bifocals == 1);
  CHECK(figure8s > 2);
}

TEST_CASE("rational arithmetic stays exact") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2) - Rational(4 * 5, 12)) == Rational(1, 3));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(7).str() == "7");
}
