#pragma once

// Middle lines, middle sets and the middle hedgehog: exact for polygons,
// sampled for smooth bodies.

#include "hedgehog/body.hpp"

#include <functional>

namespace hedgehog {

/// The line {x : <normal, x> = offset}.
struct Line {
  Rat2 normal;
  Rational offset;
};

struct SmoothLine {
  Vec2d normal;
  double offset = 0;
};

/// Average of the support lines in directions u and -u.
Line middle_line(const ConvexPolygon& k, const Rat2& u);
SmoothLine middle_line(const SmoothBody& k, double phi);

struct MiddleSet {
  Rat2 direction;     // u, a half-turn representative
  double normal_angle = 0;
  Segment geometry;   // (F(u) + F(-u)) / 2
  Segment face_plus;  // F(u)
  Segment face_minus; // F(-u)
};

MiddleSet middle_set(const ConvexPolygon& k, const Rat2& u);
/// m_K(u(phi)) for a strictly convex body.
Vec2d middle_point(const SmoothBody& k, double phi);

enum class CornerKind { weak, strong };
const char* to_string(CornerKind kind);

struct Corner {
  Rat2 location;        // (p + q) / 2
  CornerKind kind = CornerKind::strong;
  std::size_t p = 0;    // vertex maximizing <., w> for w in the gap
  std::size_t q = 0;    // vertex minimizing it
  std::size_t between = 0;  // fan positions (between, between + 1)
};

/// Polygon middle hedgehog: set i sits at fan position i, corner i joins
/// sets i and i+1 (cyclically).
struct MiddleHedgehog {
  EdgeNormalFan fan;
  std::vector<MiddleSet> sets;
  std::vector<Corner> corners;

  std::size_t weak_count() const;
  std::size_t strong_count() const { return corners.size() - weak_count(); }
  /// Direction strictly inside the gap of corner c (original frame).
  Rat2 gap_direction(std::size_t c) const;
};

/// Throws Error(parallel_edges).
MiddleHedgehog polygon_hedgehog(const ConvexPolygon& p);

struct HedgehogHull {
  HullPolygon hull;
  /// For each hull vertex, every corner located there.
  std::vector<std::vector<std::size_t>> corners_at_vertex;

  std::size_t vertex_count() const { return hull.size(); }
};

/// Hull of all middle-set endpoints; throws Error(internal) if a weak corner
/// shows up as a hull vertex.
HedgehogHull hedgehog_hull(const MiddleHedgehog& m);

/// Closed polyline through the corners in fan order.
std::vector<Vec2d> hedgehog_polyline(const MiddleHedgehog& m);

// -- smooth case ------------------------------------------------------------------

/// p(phi) = (h(phi) - h(phi + pi)) / 2.
double odd_support(const SmoothBody& k, double phi);
double odd_support_derivative(const SmoothBody& k, double phi);

struct SampledHedgehog {
  std::vector<double> angles;
  std::vector<Vec2d> points;  // x(phi) = p u + p' u'
};

/// n uniformly spaced angles in [0, pi); n >= 8.
SampledHedgehog smooth_hedgehog(const SmoothBody& k, std::size_t n);

/// Dense closed sampling of an arcgon hedgehog, refined between the
/// breakpoints of the normal intervals so no piece is skipped.
std::vector<Vec2d> arcgon_hedgehog_curve(const SmoothBody& k, std::size_t per_piece = 16);

/// Hull vertices of the samples, clustering vertices whose sample indices
/// differ by at most `gap` (cyclically) or that lie within 1e-11 diam.
std::size_t smooth_hull_vertex_count(const SampledHedgehog& m, std::size_t gap = 3);
/// One representative sample per cluster, in hull order.
std::vector<Vec2d> smooth_hull_vertices(const SampledHedgehog& m, std::size_t gap = 3);

struct Intercept {
  double f = 0;               // p / cos(phi)
  double derivative_fd = 0;   // central difference
  double derivative = 0;      // <m, e2> / cos^2(phi)
};

/// Intercept of the middle line M(u(phi)) with the e1-axis; throws for
/// |phi| >= pi/2.
Intercept midline_intercept(const SmoothBody& k, double phi, double step = 1e-4);

}  // namespace hedgehog
