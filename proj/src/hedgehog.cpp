#include "hedgehog/hedgehog.hpp"

#include "hedgehog/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hedgehog {

namespace {

Vec2d unit(double phi) { return {std::cos(phi), std::sin(phi)}; }
Vec2d unit_prime(double phi) { return {-std::sin(phi), std::cos(phi)}; }

bool shares_vertex(std::size_t e, std::size_t f, std::size_t v, std::size_t n) {
  auto touches = [&](std::size_t edge) { return edge == v || (edge + 1) % n == v; };
  return touches(e) && touches(f);
}

}  // namespace

const char* to_string(CornerKind kind) { return kind == CornerKind::weak ? "weak" : "strong"; }

Line middle_line(const ConvexPolygon& k, const Rat2& u) {
  Rational hp = support(k, u).value;
  Rational hm = support(k, -u).value;
  return {u, (hp - hm) / 2};
}

SmoothLine middle_line(const SmoothBody& k, double phi) { return {unit(phi), odd_support(k, phi)}; }

MiddleSet middle_set(const ConvexPolygon& k, const Rat2& u) {
  MiddleSet m;
  m.direction = u;
  Vec2d d = to_double(u);
  m.normal_angle = std::atan2(d.y, d.x);
  m.face_plus = support(k, u).face;
  m.face_minus = support(k, -u).face;
  // At most one face is a proper segment unless the polygon has parallel edges.
  if (m.face_plus.degenerate()) {
    m.geometry = {midpoint(m.face_plus.a, m.face_minus.a), midpoint(m.face_plus.a, m.face_minus.b)};
  } else {
    m.geometry = {midpoint(m.face_plus.a, m.face_minus.a), midpoint(m.face_plus.b, m.face_minus.a)};
  }
  return m;
}

std::size_t MiddleHedgehog::weak_count() const {
  return static_cast<std::size_t>(std::count_if(corners.begin(), corners.end(),
                                                [](const Corner& c) { return c.kind == CornerKind::weak; }));
}

Rat2 MiddleHedgehog::gap_direction(std::size_t c) const {
  const std::size_t n = sets.size();
  if (c + 1 < n) return sets[c].direction + sets[c + 1].direction;
  return sets[n - 1].direction - sets[0].direction;
}

MiddleHedgehog polygon_hedgehog(const ConvexPolygon& p) {
  MiddleHedgehog m;
  m.fan = edge_normal_fan(p);
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k) {
    Rat2 normal = p.outer_normal(m.fan.edge_of[k]);
    MiddleSet set = middle_set(p, m.fan.outer_flag[k] ? normal : Rat2(-normal));
    set.normal_angle = m.fan.angles[k];
    m.sets.push_back(std::move(set));
  }
  for (std::size_t c = 0; c < n; ++c) {
    const Rat2 w = m.gap_direction(c);
    Corner corner;
    corner.between = c;
    corner.p = support(p, w).first_vertex;
    corner.q = support(p, -w).first_vertex;
    corner.location = midpoint(p.vertex(corner.p), p.vertex(corner.q));
    const std::size_t e = m.fan.edge_of[c];
    const std::size_t f = m.fan.edge_of[(c + 1) % n];
    const bool weak = shares_vertex(e, f, corner.p, n) || shares_vertex(e, f, corner.q, n);
    corner.kind = weak ? CornerKind::weak : CornerKind::strong;

    const Segment& left = m.sets[c].geometry;
    const Segment& right = m.sets[(c + 1) % n].geometry;
    auto other_end = [&](const Segment& s) -> const Rat2* {
      if (s.a == corner.location) return &s.b;
      if (s.b == corner.location) return &s.a;
      return nullptr;
    };
    const Rat2* a = other_end(left);
    const Rat2* b = other_end(right);
    if (a == nullptr || b == nullptr)
      fail(ErrorKind::internal, "corner " + std::to_string(c) + " is not shared by its middle sets");
    const Rat2& vp = p.vertex(corner.p);
    const Rat2& vq = p.vertex(corner.q);
    int sa = orient(vp, vq, *a);
    int sb = orient(vp, vq, *b);
    if (sa != 0 && sb != 0 && (sa != sb) != weak)
      fail(ErrorKind::internal, "corner " + std::to_string(c) + " side test disagrees with adjacency");
    m.corners.push_back(corner);
  }
  return m;
}

HedgehogHull hedgehog_hull(const MiddleHedgehog& m) {
  std::vector<Rat2> points;
  points.reserve(m.corners.size());
  for (const Corner& c : m.corners) points.push_back(c.location);
  auto idx = convex_hull_indices(points);
  HedgehogHull out;
  std::vector<Rat2> verts;
  for (std::size_t i : idx) verts.push_back(points[i]);
  out.hull = HullPolygon(std::move(verts));
  for (std::size_t v = 0; v < out.hull.size(); ++v) {
    std::vector<std::size_t> at;
    for (std::size_t c = 0; c < m.corners.size(); ++c) {
      if (m.corners[c].location == out.hull[v]) {
        if (m.corners[c].kind == CornerKind::weak)
          fail(ErrorKind::internal, "weak corner " + std::to_string(c) + " is a hull vertex");
        at.push_back(c);
      }
    }
    out.corners_at_vertex.push_back(std::move(at));
  }
  return out;
}

std::vector<Vec2d> hedgehog_polyline(const MiddleHedgehog& m) {
  std::vector<Vec2d> out;
  out.reserve(m.corners.size());
  for (const Corner& c : m.corners) out.push_back(to_double(c.location));
  return out;
}

// -- smooth ---------------------------------------------------------------------------

double odd_support(const SmoothBody& k, double phi) {
  return 0.5 * (k.support(phi) - k.support(phi + std::numbers::pi));
}

double odd_support_derivative(const SmoothBody& k, double phi) {
  return 0.5 * (k.support_derivative(phi) - k.support_derivative(phi + std::numbers::pi));
}

Vec2d middle_point(const SmoothBody& k, double phi) {
  return odd_support(k, phi) * unit(phi) + odd_support_derivative(k, phi) * unit_prime(phi);
}

SampledHedgehog smooth_hedgehog(const SmoothBody& k, std::size_t n) {
  if (n < 8) fail(ErrorKind::invalid_argument, "smooth hedgehog needs at least 8 samples");
  SampledHedgehog out;
  out.angles.reserve(n);
  out.points.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    double phi = std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    out.angles.push_back(phi);
    out.points.push_back(middle_point(k, phi));
  }
  return out;
}

std::vector<Vec2d> arcgon_hedgehog_curve(const SmoothBody& k, std::size_t per_piece) {
  if (k.kind() != SmoothBody::Kind::arcgon) fail(ErrorKind::invalid_argument, "arcgon body expected");
  if (per_piece < 1) fail(ErrorKind::invalid_argument, "per_piece must be positive");
  std::vector<double> cuts;
  for (double b : arcgon_breakpoints(k))
    if (b < std::numbers::pi) cuts.push_back(b);
  if (cuts.empty() || cuts.front() > 0) cuts.insert(cuts.begin(), 0.0);
  cuts.push_back(std::numbers::pi);

  std::vector<Vec2d> out;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a = cuts[s], b = cuts[s + 1];
    if (!(b > a)) continue;
    const double mid = 0.5 * (a + b);
    const Arc& front = k.arcs()[k.arc_at(mid)];
    const Arc& back = k.arcs()[k.arc_at(mid + std::numbers::pi)];
    for (std::size_t j = 0; j < per_piece; ++j) {
      const double phi = a + (b - a) * static_cast<double>(j) / static_cast<double>(per_piece);
      const Vec2d u = unit(phi), up = unit_prime(phi);
      // h(phi) = <c, u> + r on an arc; h(phi + pi) = -<c', u> + r'
      const double p = 0.5 * ((dot(front.center, u) + front.radius) - (-dot(back.center, u) + back.radius));
      const double dp = 0.5 * (dot(front.center, up) + dot(back.center, up));
      out.push_back(p * u + dp * up);
    }
  }
  return out;
}

std::vector<Vec2d> smooth_hull_vertices(const SampledHedgehog& m, std::size_t gap) {
  const std::size_t n = m.points.size();
  if (n == 0) return {};
  std::vector<Rat2> pts;
  pts.reserve(n);
  Vec2d lo = m.points[0], hi = m.points[0];
  for (const Vec2d& v : m.points) {
    pts.emplace_back(exact_rational(v.x), exact_rational(v.y));
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  const double scale = std::max({std::abs(lo.x), std::abs(lo.y), std::abs(hi.x), std::abs(hi.y), 1.0});
  const double tol = std::max(1e-11 * norm(hi - lo), 64 * std::numeric_limits<double>::epsilon() * scale);
  auto idx = convex_hull_indices(pts);
  if (idx.size() <= 1) {
    std::vector<Vec2d> out;
    for (std::size_t i : idx) out.push_back(m.points[i]);
    return out;
  }
  auto joined = [&](std::size_t a, std::size_t b) {
    std::size_t d = a > b ? a - b : b - a;
    d = std::min(d, n - d);
    return d <= gap || norm(m.points[a] - m.points[b]) <= tol;
  };
  // Rotate so the scan starts right after a break; one cluster if none.
  const std::size_t k = idx.size();
  std::size_t start = k;
  for (std::size_t i = 0; i < k && start == k; ++i)
    if (!joined(idx[i], idx[(i + 1) % k])) start = (i + 1) % k;
  if (start == k) return {m.points[idx[0]]};
  std::vector<Vec2d> out;
  for (std::size_t s = 0; s < k; ++s) {
    const std::size_t i = (start + s) % k;
    if (s == 0 || !joined(idx[(i + k - 1) % k], idx[i])) out.push_back(m.points[idx[i]]);
  }
  return out;
}

std::size_t smooth_hull_vertex_count(const SampledHedgehog& m, std::size_t gap) {
  return smooth_hull_vertices(m, gap).size();
}

Intercept midline_intercept(const SmoothBody& k, double phi, double step) {
  const double half_pi = std::numbers::pi / 2;
  if (!(std::abs(phi) + step < half_pi)) fail(ErrorKind::invalid_argument, "intercept angle must lie inside (-pi/2, pi/2)");
  auto f = [&](double a) { return odd_support(k, a) / std::cos(a); };
  Intercept out;
  out.f = f(phi);
  out.derivative_fd = (f(phi + step) - f(phi - step)) / (2 * step);
  const double c = std::cos(phi);
  out.derivative = middle_point(k, phi).y / (c * c);
  return out;
}

}  // namespace hedgehog
