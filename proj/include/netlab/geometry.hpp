#pragma once

// Small planar geometry kernel used throughout netlab: vectors, planar
// isometries built from reflections, exact rationals for angle bookkeeping,
// and angular-interval arithmetic for the unfolding corridor tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netlab {

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

enum class ErrorCode {
  InvalidSpec,
  InvalidTriangle,
  OutsidePolygon,
  StartAtCone,
  SingularHit,
  NotGeodesic,
  MalformedNet,
  FewerThanThree,
  NotMultipleOf3,
  NotMultipleOf4,
  NotOdd,
  NotIsosceles,
  NotMidpointPerpendicular,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidTriangle: return "InvalidTriangle";
    case ErrorCode::OutsidePolygon: return "OutsidePolygon";
    case ErrorCode::StartAtCone: return "StartAtCone";
    case ErrorCode::SingularHit: return "SingularHit";
    case ErrorCode::NotGeodesic: return "NotGeodesic";
    case ErrorCode::MalformedNet: return "MalformedNet";
    case ErrorCode::FewerThanThree: return "FewerThanThree";
    case ErrorCode::NotMultipleOf3: return "NotMultipleOf3";
    case ErrorCode::NotMultipleOf4: return "NotMultipleOf4";
    case ErrorCode::NotOdd: return "NotOdd";
    case ErrorCode::NotIsosceles: return "NotIsosceles";
    case ErrorCode::NotMidpointPerpendicular: return "NotMidpointPerpendicular";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const {
    double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{1.0, 0.0};
  }
  // Counterclockwise quarter turn.
  Vec2 perp() const { return {-y, x}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

// Signed angle rotating a onto b, in (-pi, pi].
inline double signed_angle(Vec2 a, Vec2 b) { return std::atan2(cross(a, b), dot(a, b)); }

// Normalize to [0, 2*pi).
inline double wrap_2pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a == kTwoPi) a = 0.0;
  return a;
}

// Normalize to (-pi, pi].
inline double wrap_pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

// Reflect v across the line spanned by unit vector u (linear part only).
inline Vec2 reflect_dir(Vec2 v, Vec2 u) { return u * (2.0 * dot(v, u)) - v; }

// Rotate v by angle.
inline Vec2 rotate(Vec2 v, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Orientation-aware planar isometry p -> M p + t with M orthogonal.
struct Iso2 {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
  Vec2 t{0.0, 0.0};

  static Iso2 identity() { return {}; }

  // Reflection across the line through `point` with unit direction `dir`.
  static Iso2 reflection(Vec2 point, Vec2 dir) {
    double c = dir.x, s = dir.y;
    Iso2 r;
    r.m00 = c * c - s * s;
    r.m01 = 2.0 * c * s;
    r.m10 = 2.0 * c * s;
    r.m11 = s * s - c * c;
    Vec2 lp = {r.m00 * point.x + r.m01 * point.y, r.m10 * point.x + r.m11 * point.y};
    r.t = point - lp;
    return r;
  }

  Vec2 apply(Vec2 p) const {
    return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
  }
  Vec2 apply_linear(Vec2 v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }

  double det() const { return m00 * m11 - m01 * m10; }
  bool reverses_orientation() const { return det() < 0.0; }

  // this ∘ other (apply other first).
  Iso2 compose(const Iso2& o) const {
    Iso2 r;
    r.m00 = m00 * o.m00 + m01 * o.m10;
    r.m01 = m00 * o.m01 + m01 * o.m11;
    r.m10 = m10 * o.m00 + m11 * o.m10;
    r.m11 = m10 * o.m01 + m11 * o.m11;
    r.t = apply(o.t);
    return r;
  }

  Iso2 inverse() const {
    // Orthogonal linear part: inverse of M is its transpose.
    Iso2 r;
    r.m00 = m00; r.m01 = m10; r.m10 = m01; r.m11 = m11;
    Vec2 lt = {r.m00 * t.x + r.m01 * t.y, r.m10 * t.x + r.m11 * t.y};
    r.t = -lt;
    return r;
  }
};

// Distance from point p to segment [a, b].
inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double len2 = ab.norm2();
  if (len2 == 0.0) return distance(p, a);
  double s = dot(p - a, ab) / len2;
  s = std::clamp(s, 0.0, 1.0);
  return distance(p, a + ab * s);
}

// Proper/improper intersection test for segments [a,b] and [c,d] with a
// contact tolerance. Returns true when the segments come within tol of one
// another anywhere.
inline bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
  auto orient = [](Vec2 p, Vec2 q, Vec2 r) { return cross(q - p, r - p); };
  double o1 = orient(a, b, c), o2 = orient(a, b, d);
  double o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return true;
  double dmin = std::min(std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)),
                         std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)));
  return dmin <= tol;
}

// Exact small rational, used for angles expressed as multiples of pi.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Rational operator+(Rational o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(Rational o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator*(Rational o) const { return {num * o.num, den * o.den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Half-open angular interval used by the corridor windows. Angles are kept
// unwrapped (plain doubles) relative to a caller-chosen reference so that
// intersection is plain interval arithmetic.
struct AngleInterval {
  double lo = 0.0;
  double hi = -1.0; // empty by default

  bool empty() const { return !(lo < hi); }
  double width() const { return empty() ? 0.0 : hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double a, double margin = 0.0) const {
    return !empty() && a > lo + margin && a < hi - margin;
  }
  AngleInterval intersect(const AngleInterval& o) const {
    AngleInterval r;
    r.lo = std::max(lo, o.lo);
    r.hi = std::min(hi, o.hi);
    return r;
  }
};

// Unwrap angle a to lie within (ref - pi, ref + pi].
inline double unwrap_near(double a, double ref) {
  while (a <= ref - kPi) a += kTwoPi;
  while (a > ref + kPi) a -= kTwoPi;
  return a;
}

} // namespace netlab
