#include "hedgehog/body.hpp"
#include "hedgehog/error.hpp"
#include "hedgehog/hedgehog.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hedgehog;

namespace {

ConvexPolygon triangle() { return ConvexPolygon({{0, 0}, {4, 0}, {0, 4}}); }
ConvexPolygon square() { return ConvexPolygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}); }

ConvexPolygon octagon() {
  std::vector<std::pair<const char*, const char*>> raw{{"6.8", "0.5"},   {"2.54", "1.4"}, {"1.04", "4.62"},
                                                       {"1.8", "7.4"},   {"8.24", "10"},  {"12.9", "6.6"},
                                                       {"12.7", "4.3"},  {"10.66", "1.24"}};
  std::vector<Rat2> v;
  for (auto [x, y] : raw) v.emplace_back(parse_rational(x), parse_rational(y));
  return ConvexPolygon(v);
}

// Regular n-gon on a circle of radius 1000 with rounded integer vertices.
ConvexPolygon regular(int n, double phase = 0.1) {
  std::vector<Rat2> v;
  for (int i = 0; i < n; ++i) {
    double t = phase + 2 * std::numbers::pi * i / n;
    v.emplace_back(std::lround(1000 * std::cos(t)), std::lround(1000 * std::sin(t)));
  }
  return ConvexPolygon(v);
}

Rat2 rational(Vec2d v) { return {exact_rational(v.x), exact_rational(v.y)}; }

// u lies in the closed cone from a counterclockwise to b (opening < pi).
bool in_cone(const Rat2& u, const Rat2& a, const Rat2& b) { return cross(a, u) >= 0 && cross(u, b) >= 0; }

// Vertices i and j are opposite iff the normal cone of i meets the negated
// normal cone of j in a nonzero direction; two planar cones meet iff a
// boundary ray of one lies in the other.
bool opposite_oracle(const ConvexPolygon& p, std::size_t i, std::size_t j) {
  const std::size_t n = p.size();
  Rat2 a1 = p.outer_normal((i + n - 1) % n), b1 = p.outer_normal(i);
  Rat2 a2 = -p.outer_normal((j + n - 1) % n), b2 = -p.outer_normal(j);
  for (const Rat2& r : {a1, b1})
    if (in_cone(r, a2, b2)) return true;
  for (const Rat2& r : {a2, b2})
    if (in_cone(r, a1, b1)) return true;
  return false;
}

Rational squared_distance_oracle(const ConvexPolygon& k, const Rat2& x) {
  bool inside = true;
  for (std::size_t i = 0; i < k.size(); ++i) inside = inside && oracle::cross3(k.vertex(i), k.vertex(i + 1), x) >= 0;
  if (inside) return 0;
  Rational best = -1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Rational d = squared_distance_to_segment(x, k.vertex(i), k.vertex(i + 1));
    if (best < 0 || d < best) best = d;
  }
  return best;
}

bool parallel_free(const ConvexPolygon& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (cross(p.edge_vector(i), p.edge_vector(j)) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 1}}), Error);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {4, 0}, {0, 4}}), Error);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}), Error);
  // a pentagram winds twice with left turns everywhere
  std::vector<Rat2> star;
  for (int i = 0; i < 5; ++i) {
    double t = 4 * std::numbers::pi * i / 5;
    star.emplace_back(std::lround(100 * std::cos(t)), std::lround(100 * std::sin(t)));
  }
  CHECK_THROWS_AS(ConvexPolygon{star}, Error);
  ConvexPolygon cw({{0, 0}, {0, 4}, {4, 0}});
  CHECK(cw.as_hull() == triangle().as_hull());
  CHECK(orient(cw.vertex(0), cw.vertex(1), cw.vertex(2)) > 0);
}

TEST_CASE("support values and faces") {
  SupportResult s = support(triangle(), {0, -1});
  CHECK(s.value == 0);
  CHECK(((s.face.a == Rat2{0, 0} && s.face.b == Rat2{4, 0}) || (s.face.a == Rat2{4, 0} && s.face.b == Rat2{0, 0})));
  SupportResult d = support(triangle(), {1, 1});
  CHECK(d.value == 4);
  CHECK(((d.face.a == Rat2{4, 0} && d.face.b == Rat2{0, 4}) || (d.face.a == Rat2{0, 4} && d.face.b == Rat2{4, 0})));
  SupportResult v = support(triangle(), {-1, -2});
  CHECK(v.face.degenerate());
  CHECK(v.face.a == Rat2{0, 0});

  SmoothBody disk = SmoothBody::fourier(1, {});
  for (double t : {0.0, 0.7, 2.0, -1.3}) {
    Vec2d u{std::cos(t), std::sin(t)};
    SmoothSupport r = support(disk, u);
    CHECK(std::abs(r.value - 1) < 1e-15);
    CHECK(norm(r.point - u) < 1e-15);
  }
}

TEST_CASE("support is homogeneous and translation additive") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-9, 9);
  ConvexPolygon k = octagon();
  for (int i = 0; i < 100; ++i) {
    Rat2 u{c(rng), c(rng)};
    if (u == Rat2{0, 0}) continue;
    Rat2 t{Rational(c(rng)) / 7, Rational(c(rng)) / 3};
    CHECK(support(k.translated(t), u).value == support(k, u).value + dot(t, u));
    CHECK(support(k, Rational(5, 2) * u).value == Rational(5, 2) * support(k, u).value);
    CHECK(support(k, u).value == oracle::support(k.vertices(), u));
  }
}

TEST_CASE("edge normal fan") {
  EdgeNormalFan t = edge_normal_fan(triangle());
  CHECK(t.size() == 3);
  CHECK(t.angles[0] < t.angles[1]);
  CHECK(t.angles[1] < t.angles[2]);
  CHECK(edge_normal_fan(octagon()).size() == 8);
  CHECK_THROWS_AS(edge_normal_fan(square()), Error);
  try {
    edge_normal_fan(square());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parallel_edges);
  }
}

TEST_CASE("fan angles stay inside the open half turn and map back to outer normals") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 100; ++round) {
    std::vector<Rat2> v = oracle::random_polygon(rng, 5 + round % 6, 200);
    ConvexPolygon p(v);
    EdgeNormalFan f = edge_normal_fan(p);
    REQUIRE(f.size() == p.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
      CHECK(std::abs(f.angles[k]) < std::numbers::pi / 2);
      if (k > 0) CHECK(f.angles[k - 1] < f.angles[k]);
      Rat2 back = unrotate_by_tangent(f.normals[k], f.rotation_tangent);
      Rat2 outer = p.outer_normal(f.edge_of[k]);
      CHECK(cross(back, outer) == 0);
      CHECK((dot(back, outer) > 0) == f.outer_flag[k]);
    }
  }
  ConvexPolygon flat({{0, 0}, {5, 0}, {3, 2}, {-1, 3}});
  EdgeNormalFan f = edge_normal_fan(flat);
  CHECK(f.rotation_tangent != 0);
  for (double a : f.angles) CHECK(std::abs(a) < std::numbers::pi / 2);
}

TEST_CASE("opposite vertices agree with the normal cone oracle") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 60; ++round) {
    ConvexPolygon p(oracle::random_polygon(rng, 4 + round % 9, 300));
    std::set<std::pair<std::size_t, std::size_t>> calipers;
    for (const AntipodalPair& a : antipodal_pairs(p)) {
      calipers.insert({std::min(a.max_vertex, a.min_vertex), std::max(a.max_vertex, a.min_vertex)});
      Rat2 w = a.witness();
      CHECK(support(p, w).face.degenerate());
      CHECK(support(p, w).first_vertex == a.max_vertex);
      CHECK(support(p, -w).first_vertex == a.min_vertex);
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        const bool expect = opposite_oracle(p, i, j);
        CHECK(are_opposite_vertices(p, i, j) == expect);
        // the sweep lists pairs with an open arc; closed-cone contacts only
        // touch at a single direction and are reported by the direct test
        if (calipers.count({i, j}) > 0) CHECK(expect);
      }
    }
    std::optional<LongEdge> le = find_long_edge(p);
    bool any = false;
    for (std::size_t e = 0; e < p.size(); ++e) any = any || opposite_oracle(p, e, (e + 1) % p.size());
    CHECK(le.has_value() == any);
    if (le) CHECK(opposite_oracle(p, le->edge, (le->edge + 1) % p.size()));
  }
}

TEST_CASE("long edges") {
  // every edge of a triangle is long: the lines orthogonal to it through its
  // endpoints both support the triangle
  CHECK(has_long_edge(triangle()));
  ConvexPolygon quad({{0, 0}, {4, 0}, {4, 1}, {-1, 1}});
  CHECK(has_long_edge(quad));
  CHECK(has_long_edge(quad) == (opposite_oracle(quad, 0, 1) || opposite_oracle(quad, 1, 2) ||
                                opposite_oracle(quad, 2, 3) || opposite_oracle(quad, 3, 0)));
  CHECK_FALSE(has_long_edge(regular(7)));
}

TEST_CASE("central symmetry") {
  auto c = central_symmetry_center(square());
  REQUIRE(c);
  CHECK(*c == Rat2{1, 1});
  CHECK_FALSE(central_symmetry_center(triangle()));
  CHECK_FALSE(central_symmetry_center(SmoothBody::fourier(1, {{3, 0.1, 0}})));
  auto f = central_symmetry_center(SmoothBody::fourier(1, {{1, 0.2, -0.1}, {2, 0.05, 0}}));
  REQUIRE(f);
  CHECK(f->x == 0.2);
  CHECK(f->y == -0.1);
  auto disk = central_symmetry_center(SmoothBody::circle({3, -2}, 1.5));
  REQUIRE(disk);
  CHECK(disk->x == 3);
}

TEST_CASE("fourier bodies must be strictly convex") {
  CHECK_THROWS_AS(SmoothBody::fourier(1, {{2, 0.4, 0}}), Error);
  CHECK_NOTHROW(SmoothBody::fourier(1, {{2, 0.3, 0}}));
  SmoothBody k = SmoothBody::fourier(1, {{3, 0.1, 0.05}});
  for (double t = -3; t < 3; t += 0.37) {
    const double h = 1e-5;
    double fd = (k.support(t + h) - k.support(t - h)) / (2 * h);
    CHECK(std::abs(fd - k.support_derivative(t)) < 1e-8);
  }
}

TEST_CASE("distance to a smooth body") {
  SmoothBody disk = SmoothBody::circle({1, 0}, 1);
  CHECK(std::abs(distance_to_body(disk, {4, 0}) - 2) < 1e-9);
  CHECK(distance_to_body(disk, {1, 0.5}) == 0);
  CHECK(std::abs(distance_to_body(disk, {1, -3}) - 2) < 1e-9);
}

TEST_CASE("sandwich polygon around a triangle") {
  const ConvexPolygon k = triangle();
  ConvexPolygon p = sandwich_polygon(k, 0.5, 1);
  for (const Rat2& v : k.vertices()) CHECK(p.contains_strictly(v));
  for (const Rat2& v : p.vertices()) CHECK(squared_distance_oracle(k, v) < Rational(1, 4));
  CHECK(parallel_free(p));
  for (std::size_t e = 0; e < p.size(); ++e) CHECK_FALSE(opposite_oracle(p, e, (e + 1) % p.size()));
  CHECK(sandwich_polygon(k, 0.5, 1) == p);
  CHECK_THROWS_AS(sandwich_polygon(k, 0.0), Error);
  CHECK_THROWS_AS(sandwich_polygon(k, -1.0), Error);
}

TEST_CASE("sandwich polygon around the unit circle") {
  SmoothBody disk = SmoothBody::circle({0, 0}, 1);
  ConvexPolygon p = sandwich_polygon(disk, 0.1, 1);
  // every edge line stays outside the unit disk, every vertex inside radius 1.1
  for (std::size_t e = 0; e < p.size(); ++e) {
    Rat2 n = p.outer_normal(e);
    Rational offset = dot(n, p.vertex(e));
    CHECK(offset > 0);
    CHECK(offset * offset > dot(n, n));
  }
  for (const Rat2& v : p.vertices()) CHECK(dot(v, v) < Rational(121, 100));
  // a circumscribed n-gon has error 1/cos(pi/n) - 1, which must be below 0.1
  CHECK(1 / std::cos(std::numbers::pi / static_cast<double>(p.size())) - 1 < 0.1);
  CHECK(parallel_free(p));
  CHECK_FALSE(has_long_edge(p));
}

TEST_CASE("arc smoothing converges like 1/R") {
  ConvexPolygon q({{0, 0}, {1000, 0}, {500, 866}});
  std::vector<Vec2d> poly;
  for (const Rat2& v : q.vertices()) poly.push_back(to_double(v));
  const double diam = diameter(q);
  std::vector<double> d;
  for (double r : {10.0, 100.0, 1000.0}) {
    SmoothBody m = smooth_by_arcs(q, r * diam);
    d.push_back(curve_hausdorff_distance(arcgon_boundary(m, 32), poly, 1e-4 * diam));
  }
  CHECK(d[0] > d[1]);
  CHECK(d[1] > d[2]);
  CHECK(d[0] / d[1] > 5);
  CHECK(d[1] / d[2] > 5);
  CHECK(d[2] < 1e-3 * diam);
}

TEST_CASE("arc smoothing rejects small radii") {
  ConvexPolygon q = triangle();
  const double r0 = minimal_arc_radius(q);
  CHECK(r0 >= 2);
  CHECK_THROWS_AS(smooth_by_arcs(q, 0.5 * r0), Error);
  try {
    smooth_by_arcs(q, r0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::radius_too_small);
  }
  CHECK_NOTHROW(smooth_by_arcs(q, 1.01 * r0));
}

TEST_CASE("arc smoothing gives a tangent continuous arcgon") {
  ConvexPolygon q = octagon();
  SmoothBody m = smooth_by_arcs(q, 20 * diameter(q));
  const auto& arcs = m.arcs();
  REQUIRE(arcs.size() == 2 * q.size());
  double total = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    const Arc& b = arcs[(i + 1) % arcs.size()];
    CHECK(a.radius > 0);  // h + h'' equals the radius inside each arc
    total += a.to - a.from;
    Vec2d end = a.center + a.radius * Vec2d{std::cos(a.to), std::sin(a.to)};
    Vec2d start = b.center + b.radius * Vec2d{std::cos(b.from), std::sin(b.from)};
    CHECK(norm(end - start) < 1e-9 * diameter(q));
  }
  CHECK(std::abs(total - 2 * std::numbers::pi) < 1e-12);
  // the body contains Q and every point of Q's boundary is near M's boundary
  for (const Rat2& v : q.vertices()) CHECK(distance_to_body(m, to_double(v)) == 0);
}

TEST_CASE("regular polygon keeps its hedgehog hull count after smoothing") {
  for (int n : {5, 7, 9}) {
    ConvexPolygon q = regular(n);
    const std::size_t count = hedgehog_hull(polygon_hedgehog(q)).vertex_count();
    for (double r : {50.0, 200.0}) {
      SmoothBody m = smooth_by_arcs(q, r * diameter(q));
      CHECK(smooth_hull_vertex_count(smooth_hedgehog(m, 4096)) == count);
    }
  }
}

TEST_CASE("arcgon validation") {
  CHECK_THROWS_AS(SmoothBody::arcgon({}), Error);
  // half a circle does not close up
  CHECK_THROWS_AS(SmoothBody::arcgon({{{0, 0}, 1, 0, std::numbers::pi}}), Error);
  // two arcs of different radii about one center jump at the seams
  CHECK_THROWS_AS(SmoothBody::arcgon({{{0, 0}, 1, 0, std::numbers::pi}, {{0, 0}, 2, std::numbers::pi, 2 * std::numbers::pi}}),
                  Error);
  SmoothBody ok = SmoothBody::arcgon({{{0, 0}, 1, 0, std::numbers::pi}, {{0, 0}, 1, std::numbers::pi, 2 * std::numbers::pi}});
  CHECK(std::abs(ok.support(1.0) - 1) < 1e-15);
  CHECK(rational(ok.boundary_point(0)) == Rat2{1, 0});
}
