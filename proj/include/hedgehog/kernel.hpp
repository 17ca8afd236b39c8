#pragma once

// Exact planar kernel: rational points, orientation, convex hulls,
// convex clipping and areas. Nothing in here compares with an epsilon.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hedgehog {

using Rational = mpq_class;

int sign(const Rational& v);

/// Exact rational parse of "p/q", "p", or a decimal literal such as "-6.25".
Rational parse_rational(const std::string& text);
/// Exact value of a finite double (dyadic rational).
Rational exact_rational(double v);
/// Nearest dyadic k/2^bits, rounded toward the given direction (-1, 0, +1).
Rational dyadic(double v, int bits, int round = 0);

struct Rat2 {
  Rational x;
  Rational y;

  Rat2() = default;
  Rat2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Rat2(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Rat2& a, const Rat2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend Rat2 operator+(const Rat2& a, const Rat2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Rat2 operator-(const Rat2& a, const Rat2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Rat2 operator-(const Rat2& a) { return {-a.x, -a.y}; }
  friend Rat2 operator*(const Rational& s, const Rat2& a) { return {s * a.x, s * a.y}; }
};

/// Lexicographic order (x, then y).
bool lex_less(const Rat2& a, const Rat2& b);

inline Rational dot(const Rat2& a, const Rat2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Rat2& a, const Rat2& b) { return a.x * b.y - a.y * b.x; }
/// Counterclockwise quarter turn.
inline Rat2 perp(const Rat2& a) { return {-a.y, a.x}; }
inline Rat2 midpoint(const Rat2& a, const Rat2& b) {
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

/// Sign of (b-a) x (c-a).
int orient(const Rat2& a, const Rat2& b, const Rat2& c);

/// Squared Euclidean distance from a point to the closed segment [a, b].
Rational squared_distance_to_segment(const Rat2& x, const Rat2& a, const Rat2& b);

struct Segment {
  Rat2 a;
  Rat2 b;

  bool degenerate() const { return a == b; }
  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
};

enum class HullKind { empty, point, segment, polygon };

/// Strictly convex counterclockwise vertex cycle, or a flagged degenerate
/// hull (empty set, single point, segment).
class HullPolygon {
 public:
  HullPolygon() = default;
  /// Trusts the caller: vertices must already be a strictly convex CCW cycle
  /// (or 0, 1, 2 distinct points).
  explicit HullPolygon(std::vector<Rat2> vertices);

  HullKind kind() const { return kind_; }
  bool degenerate() const { return kind_ != HullKind::polygon; }
  bool empty() const { return kind_ == HullKind::empty; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Rat2>& vertices() const { return vertices_; }
  const Rat2& operator[](std::size_t i) const { return vertices_[i]; }

  /// Point inside or on the boundary.
  bool contains(const Rat2& x) const;
  /// Point in the topological interior (always false for degenerate hulls).
  bool contains_strictly(const Rat2& x) const;

  /// Equal as point sets: same cyclic vertex sequence up to rotation.
  friend bool operator==(const HullPolygon& a, const HullPolygon& b);

 private:
  std::vector<Rat2> vertices_;
  HullKind kind_ = HullKind::empty;
};

/// Indices (into points) of the hull vertices, counterclockwise, starting at
/// the lexicographically smallest point. Collinear and duplicate points are
/// dropped, so the result lists exposed points only.
std::vector<std::size_t> convex_hull_indices(std::span<const Rat2> points);

HullPolygon convex_hull(std::span<const Rat2> points);

/// Exact intersection of two convex sets given as hulls.
HullPolygon clip_convex(const HullPolygon& p, const HullPolygon& q);

/// Twice the signed shoelace area of a closed vertex cycle.
Rational signed_area2(std::span<const Rat2> cycle);
Rational area(const HullPolygon& p);

// -- floating-point side ----------------------------------------------------

struct Vec2d {
  double x = 0;
  double y = 0;

  friend Vec2d operator+(Vec2d a, Vec2d b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2d operator-(Vec2d a, Vec2d b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2d operator*(double s, Vec2d a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2d a, Vec2d b) { return a.x == b.x && a.y == b.y; }
};

Vec2d to_double(const Rat2& p);
double norm(Vec2d v);
inline double dot(Vec2d a, Vec2d b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2d a, Vec2d b) { return a.x * b.y - a.y * b.x; }
double distance_to_segment(Vec2d x, Vec2d a, Vec2d b);

/// Hausdorff distance between two finite point samples (brute force).
/// As an estimate of the distance between the sampled sets its error is at
/// most the larger sampling radius.
double hausdorff_distance(std::span<const Vec2d> a, std::span<const Vec2d> b);

/// Hausdorff distance between two polylines, each treated as the union of its
/// segments (closed when the flag is set). Points of each curve are taken at
/// spacing at most `step`, so the result is within `step` of the exact value.
double curve_hausdorff_distance(std::span<const Vec2d> a, std::span<const Vec2d> b,
                                double step, bool closed = true);

std::string to_string(const Rational& v);

}  // namespace hedgehog
