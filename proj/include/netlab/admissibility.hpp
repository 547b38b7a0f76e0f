#pragma once

// Exact admissibility constraints for geodesic nets on doubled regular
// polygons. Each face of a 3-regular net with y boundary vertices enclosing
// x cone points forces n * (6 - y) == 12 * x; loop faces of a figure-eight
// force the turning angle alpha == 2*pi - (4*pi/n) * x. Everything here is
// integer/rational arithmetic; no floating point in the results.

#include <vector>

#include "netlab/geometry.hpp"

namespace netlab {

struct Constraint3Regular {
  int n = 0;
  std::vector<std::pair<int, int>> solutions; // (x, y) with x >= 1, y in 1..5
  bool degenerate_allowed = true;             // y == 6, x == 0 faces
};

// All (x, y) with y in 1..5, x >= 1 and n*(6-y) == 12*x. Nonempty exactly
// when 3 | n or 4 | n.
inline Constraint3Regular solve_3regular(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidSpec, "n must be at least 3");
  Constraint3Regular c;
  c.n = n;
  for (int y = 1; y <= 5; ++y) {
    long long lhs = static_cast<long long>(n) * (6 - y);
    if (lhs % 12 != 0) continue;
    long long x = lhs / 12;
    if (x >= 1) c.solutions.emplace_back(static_cast<int>(x), y);
  }
  return c;
}

struct ThetaAdmissibility {
  bool admissible = false;
  int x_per_face = 0; // defined when admissible
};

// Theta faces have y == 2, so n == 3x.
inline ThetaAdmissibility theta_admissible(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidSpec, "n must be at least 3");
  ThetaAdmissibility t;
  t.admissible = (n % 3 == 0);
  if (t.admissible) t.x_per_face = n / 3;
  return t;
}

struct BifocalAdmissibility {
  bool admissible = false;
  int loop_x = 0;  // 5n/12 per loop face (y == 1)
  int outer_x = 0; // 2n/12 for the third face (y == 4 corners)
};

// Loop faces have y == 1, so n == 12x/5; admissibility is necessary only,
// existence on the 12-gon is open.
inline BifocalAdmissibility bifocal_admissible(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidSpec, "n must be at least 3");
  BifocalAdmissibility b;
  b.admissible = (n % 12 == 0);
  if (b.admissible) {
    b.loop_x = 5 * n / 12;
    b.outer_x = 2 * n / 12;
  }
  return b;
}

struct LoopAngleSet {
  int n = 0;
  // Non-degenerate loop turning angles: alpha = (2 - 4x/n) * pi in (0, pi).
  std::vector<std::pair<int, Rational>> entries; // (x, alpha / pi)
  // Integer x giving degenerate candidates alpha in {0, pi, 2pi} or outside
  // (0, pi); kept for reporting.
  std::vector<std::pair<int, Rational>> degenerate; // (x, alpha / pi)
};

inline LoopAngleSet figure8_loop_angles(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidSpec, "n must be at least 3");
  LoopAngleSet s;
  s.n = n;
  for (int x = 0; 4 * x <= 2 * n; ++x) {
    Rational alpha_over_pi = Rational(2) - Rational(4 * x, n);
    bool nondegenerate = Rational(0) < alpha_over_pi && alpha_over_pi < Rational(1);
    if (nondegenerate)
      s.entries.emplace_back(x, alpha_over_pi);
    else
      s.degenerate.emplace_back(x, alpha_over_pi);
  }
  return s;
}

struct TriangleClassification {
  bool theta = false;
  bool bifocal = false;
  bool figure8 = false;
};

// Doubled-triangle classification: theta wants every face to hold 4*pi/3
// curvature (equilateral); the bifocal loops want 5*pi/3 each with 2*pi/3
// left over (30-30-120); a figure-eight needs two loops of equal curvature
// (isosceles).
inline TriangleClassification classify_triangle(double a0, double a1, double a2,
                                                double tol = 1e-10) {
  double sum = a0 + a1 + a2;
  if (std::abs(sum - kPi) > 1e-9 || a0 <= 0 || a1 <= 0 || a2 <= 0)
    throw Error(ErrorCode::InvalidTriangle, "angles must be positive and sum to pi");
  double s[3] = {a0, a1, a2};
  std::sort(s, s + 3);
  TriangleClassification c;
  c.theta = std::abs(s[0] - kPi / 3) <= tol && std::abs(s[1] - kPi / 3) <= tol &&
            std::abs(s[2] - kPi / 3) <= tol;
  c.bifocal = std::abs(s[0] - kPi / 6) <= tol && std::abs(s[1] - kPi / 6) <= tol &&
              std::abs(s[2] - 2 * kPi / 3) <= tol;
  c.figure8 = std::abs(s[0] - s[1]) <= tol || std::abs(s[1] - s[2]) <= tol;
  return c;
}

} // namespace netlab
