#pragma once

// Convex body representations: exact convex polygons and smooth bodies given
// by a support function (circular-arc bodies and truncated Fourier series).

#include "hedgehog/kernel.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace hedgehog {

/// Strictly convex polygon, counterclockwise, at least three vertices.
class ConvexPolygon {
 public:
  /// Validates strict convexity; clockwise input is reversed.
  explicit ConvexPolygon(std::vector<Rat2> vertices);
  /// Convex hull of arbitrary points; needs three non-collinear points.
  static ConvexPolygon hull_of(std::span<const Rat2> points);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Rat2>& vertices() const { return vertices_; }
  /// Cyclic access.
  const Rat2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Edge i runs from vertex(i) to vertex(i + 1).
  Rat2 edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  /// Outer normal of edge i (not normalized).
  Rat2 outer_normal(std::size_t i) const;

  ConvexPolygon translated(const Rat2& t) const;
  HullPolygon as_hull() const { return HullPolygon(vertices_); }

  bool contains_strictly(const Rat2& x) const;
  /// Zero inside, squared Euclidean distance outside.
  Rational squared_distance(const Rat2& x) const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  struct trusted_t {};
  ConvexPolygon(std::vector<Rat2> vertices, trusted_t) : vertices_(std::move(vertices)) {}

  std::vector<Rat2> vertices_;
};

struct SupportResult {
  Rational value;  // h(P, u) for the (unnormalized) direction u
  Segment face;    // degenerate when the face is a vertex
  std::size_t first_vertex = 0;  // index of face.a
};

/// Exact support value and face. Homogeneous in u, so u need not be a unit vector.
SupportResult support(const ConvexPolygon& p, const Rat2& direction);

/// Half-turn reduced edge normals in increasing angle order.
struct EdgeNormalFan {
  Rational rotation_tangent;       // tan of half the applied rotation; 0 means none
  double rotation = 0;             // radians
  std::vector<double> angles;      // strictly increasing, inside (-pi/2, pi/2)
  std::vector<std::size_t> edge_of;
  std::vector<bool> outer_flag;    // u(angle) is the outer normal of the edge
  std::vector<Rat2> normals;       // exact rotated representatives, x > 0
  std::vector<std::size_t> position_of_edge;

  std::size_t size() const { return angles.size(); }
};

/// Exact rotation by the angle whose half-angle tangent is t.
Rat2 rotate_by_tangent(const Rat2& v, const Rational& t);
Rat2 unrotate_by_tangent(const Rat2& v, const Rational& t);

/// Throws Error(parallel_edges) when two edges are parallel.
EdgeNormalFan edge_normal_fan(const ConvexPolygon& p);

bool has_parallel_edges(const ConvexPolygon& p);

/// Vertex pair (i, j) together with an open arc of directions u for which
/// vertex i is the unique maximizer and vertex j the unique minimizer.
struct AntipodalPair {
  std::size_t max_vertex;
  std::size_t min_vertex;
  Rat2 arc_begin;
  Rat2 arc_end;
  /// A direction strictly inside the arc.
  Rat2 witness() const { return arc_begin + arc_end; }
};

/// All opposite vertex pairs, by rotating calipers (linear time).
std::vector<AntipodalPair> antipodal_pairs(const ConvexPolygon& p);

/// Direct test from the normal cones; independent of the caliper sweep.
bool are_opposite_vertices(const ConvexPolygon& p, std::size_t i, std::size_t j);

struct LongEdge {
  std::size_t edge;
  Rat2 direction;  // vertex(edge) and vertex(edge+1) are extreme in ±direction
};

std::optional<LongEdge> find_long_edge(const ConvexPolygon& p);
inline bool has_long_edge(const ConvexPolygon& p) { return find_long_edge(p).has_value(); }

std::optional<Rat2> central_symmetry_center(const ConvexPolygon& p);

// -- smooth bodies ----------------------------------------------------------------

/// Piece of the boundary: all boundary points with outer normal angle in
/// [from, to) lie on the circle (center, radius).
struct Arc {
  Vec2d center;
  double radius = 0;
  double from = 0;
  double to = 0;
};

struct FourierTerm {
  int order = 1;
  double a = 0;  // cosine coefficient
  double b = 0;  // sine coefficient
};

/// Strictly convex body given by its support function h(phi) = h(K, u(phi)).
class SmoothBody {
 public:
  enum class Kind { arcgon, fourier };

  /// h(phi) = a0 + sum a_j cos(j phi) + b_j sin(j phi); rejects bodies with
  /// h + h'' <= 0 somewhere on a verification grid.
  static SmoothBody fourier(double a0, std::vector<FourierTerm> terms);
  /// Arcs must partition the circle of normal angles in counterclockwise
  /// order and join up continuously.
  static SmoothBody arcgon(std::vector<Arc> arcs);
  static SmoothBody circle(Vec2d center, double radius);

  Kind kind() const { return kind_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  double a0() const { return a0_; }
  const std::vector<FourierTerm>& terms() const { return terms_; }

  double support(double phi) const;
  double support_derivative(double phi) const;
  /// Unique boundary point with outer normal u(phi).
  Vec2d boundary_point(double phi) const;
  /// Index of the arc whose normal interval contains phi (arcgon only).
  std::size_t arc_at(double phi) const;

  SmoothBody translated(Vec2d t) const;
  SmoothBody rotated(double angle) const;
  /// 2z - K.
  SmoothBody reflected(Vec2d z) const;

  /// Sampled boundary points (counterclockwise).
  std::vector<Vec2d> boundary_samples(std::size_t n) const;
  double diameter_estimate() const;

 private:
  Kind kind_ = Kind::fourier;
  std::vector<Arc> arcs_;
  double a0_ = 0;
  std::vector<FourierTerm> terms_;
};

struct SmoothSupport {
  double value;
  Vec2d point;
};
/// Support in direction u (normalized internally).
SmoothSupport support(const SmoothBody& k, Vec2d direction);

/// Center of symmetry if the body is centrally symmetric (fourier: exact test
/// on odd harmonics; arcgon: tolerance test on the odd part of h).
std::optional<Vec2d> central_symmetry_center(const SmoothBody& k);

/// Distance from a point to a smooth body (0 inside), by maximizing
/// <x,u> - h(u) over a fine angle grid with local refinement.
double distance_to_body(const SmoothBody& k, Vec2d x);

double diameter(const ConvexPolygon& p);

using Body = std::variant<ConvexPolygon, SmoothBody>;

// -- approximation --------------------------------------------------------------

/// Polygon P with K in int P, P in int(K + eps B), no parallel edges and no
/// long edge. Deterministic in `seed`.
ConvexPolygon sandwich_polygon(const ConvexPolygon& k, double eps, std::uint64_t seed = 1);
ConvexPolygon sandwich_polygon(const SmoothBody& k, double eps, std::uint64_t seed = 1);
ConvexPolygon sandwich_polygon(const Body& k, double eps, std::uint64_t seed = 1);

/// K in int P, exact.
bool inside_interior(const ConvexPolygon& k, const ConvexPolygon& p);
/// K in int P, on the support values of P's edge normals.
bool inside_interior(const SmoothBody& k, const ConvexPolygon& p);
bool inside_interior(const Body& k, const ConvexPolygon& p);
/// P in int(K + eps B): exact for polygon K.
bool inside_neighborhood(const ConvexPolygon& p, const ConvexPolygon& k, const Rational& eps);
bool inside_neighborhood(const ConvexPolygon& p, const SmoothBody& k, double eps);
bool inside_neighborhood(const ConvexPolygon& p, const Body& k, double eps);

/// Smallest radius for which smooth_by_arcs(q, R) is defined; any R strictly
/// above it is admissible.
double minimal_arc_radius(const ConvexPolygon& q);

/// Replaces every edge of Q by a circular arc of radius R through its
/// endpoints and rounds every vertex by a circle of radius corner_radius, so
/// the result is tangent-continuous. Corner rounding leaves the middle
/// hedgehog unchanged. corner_radius < 0 picks diam(Q)^2 / (1000 R).
SmoothBody smooth_by_arcs(const ConvexPolygon& q, double radius, double corner_radius = -1);

/// Closed boundary polyline of an arcgon with per_arc + 1 points on every arc.
std::vector<Vec2d> arcgon_boundary(const SmoothBody& k, std::size_t per_arc = 16);

/// Vertices and normal-interval breakpoints in [0, 2pi) for arcgon sampling.
std::vector<double> arcgon_breakpoints(const SmoothBody& k);

/// Angle wrapped into [0, 2pi).
double wrap_angle(double phi);

}  // namespace hedgehog
