#include "hedgehog/body.hpp"

#include "hedgehog/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hedgehog {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

Vec2d unit(double phi) { return {std::cos(phi), std::sin(phi)}; }
Vec2d unit_prime(double phi) { return {-std::sin(phi), std::cos(phi)}; }

// x strictly inside the open counterclockwise arc (a, b) of angle < pi
bool strictly_between(const Rat2& x, const Rat2& a, const Rat2& b) {
  return sgn(cross(a, x)) > 0 && sgn(cross(x, b)) > 0;
}

bool same_direction(const Rat2& a, const Rat2& b) {
  return sgn(cross(a, b)) == 0 && sgn(dot(a, b)) > 0;
}

}  // namespace

double wrap_angle(double phi) {
  double w = std::fmod(phi, two_pi);
  if (w < 0) w += two_pi;
  if (w >= two_pi) w -= two_pi;
  return w;
}

// -- ConvexPolygon -----------------------------------------------------------------

ConvexPolygon::ConvexPolygon(std::vector<Rat2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) fail(ErrorKind::invalid_argument, "a convex polygon needs at least 3 vertices");
  if (sgn(signed_area2(vertices_)) < 0) std::reverse(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(vertex(i), vertex(i + 1), vertex(i + 2)) <= 0)
      fail(ErrorKind::invalid_argument, "polygon is not strictly convex at vertex " + std::to_string((i + 1) % n));
  }
  // Left turns everywhere still allow a cycle that winds more than once.
  auto hull = convex_hull_indices(vertices_);
  if (hull.size() != n) fail(ErrorKind::invalid_argument, "polygon vertex cycle is not simple");
  for (std::size_t i = 0; i < n; ++i) {
    if (hull[(i + 1) % n] != (hull[i] + 1) % n)
      fail(ErrorKind::invalid_argument, "polygon vertex cycle is not simple");
  }
}

ConvexPolygon ConvexPolygon::hull_of(std::span<const Rat2> points) {
  HullPolygon h = convex_hull(points);
  if (h.degenerate()) fail(ErrorKind::invalid_argument, "points do not span a polygon");
  return ConvexPolygon(h.vertices(), trusted_t{});
}

Rat2 ConvexPolygon::outer_normal(std::size_t i) const {
  Rat2 e = edge_vector(i);
  return {e.y, -e.x};
}

ConvexPolygon ConvexPolygon::translated(const Rat2& t) const {
  std::vector<Rat2> out;
  out.reserve(vertices_.size());
  for (const Rat2& v : vertices_) out.push_back(v + t);
  return ConvexPolygon(std::move(out), trusted_t{});
}

bool ConvexPolygon::contains_strictly(const Rat2& x) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (orient(vertex(i), vertex(i + 1), x) <= 0) return false;
  return true;
}

Rational ConvexPolygon::squared_distance(const Rat2& x) const {
  bool inside = true;
  for (std::size_t i = 0; i < size() && inside; ++i)
    inside = orient(vertex(i), vertex(i + 1), x) >= 0;
  if (inside) return 0;
  Rational best = squared_distance_to_segment(x, vertex(0), vertex(1));
  for (std::size_t i = 1; i < size(); ++i) {
    Rational d = squared_distance_to_segment(x, vertex(i), vertex(i + 1));
    if (d < best) best = d;
  }
  return best;
}

SupportResult support(const ConvexPolygon& p, const Rat2& direction) {
  if (direction.x == 0 && direction.y == 0)
    fail(ErrorKind::invalid_argument, "support direction must be nonzero");
  const std::size_t n = p.size();
  std::size_t best = 0;
  Rational best_value = dot(p.vertex(0), direction);
  for (std::size_t i = 1; i < n; ++i) {
    Rational v = dot(p.vertex(i), direction);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  SupportResult r;
  r.value = best_value;
  // A face has at most two vertices, and they are cyclically adjacent.
  if (dot(p.vertex(best + 1), direction) == best_value) {
    r.face = {p.vertex(best), p.vertex(best + 1)};
    r.first_vertex = best;
  } else if (dot(p.vertex(best + n - 1), direction) == best_value) {
    r.face = {p.vertex(best + n - 1), p.vertex(best)};
    r.first_vertex = (best + n - 1) % n;
  } else {
    r.face = {p.vertex(best), p.vertex(best)};
    r.first_vertex = best;
  }
  return r;
}

// -- edge normal fan ----------------------------------------------------------------

Rat2 rotate_by_tangent(const Rat2& v, const Rational& t) {
  if (t == 0) return v;
  Rational d = 1 + t * t;
  Rational c = (1 - t * t) / d;
  Rational s = 2 * t / d;
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Rat2 unrotate_by_tangent(const Rat2& v, const Rational& t) {
  return rotate_by_tangent(v, Rational(-t));
}

bool has_parallel_edges(const ConvexPolygon& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(cross(p.edge_vector(i), p.edge_vector(j))) == 0) return true;
  return false;
}

EdgeNormalFan edge_normal_fan(const ConvexPolygon& p) {
  const std::size_t n = p.size();
  if (has_parallel_edges(p)) fail(ErrorKind::parallel_edges, "polygon has a pair of parallel edges");

  EdgeNormalFan fan;
  std::vector<Rat2> rotated(n);
  // At most n rotations are forbidden (one per edge), so n + 1 candidates suffice.
  bool found = false;
  for (std::size_t attempt = 0; attempt <= n && !found; ++attempt) {
    Rational t(static_cast<long>(attempt), 257);
    found = true;
    for (std::size_t e = 0; e < n && found; ++e) {
      rotated[e] = rotate_by_tangent(p.outer_normal(e), t);
      found = sgn(rotated[e].x) != 0;
    }
    if (found) fan.rotation_tangent = t;
  }
  if (!found) fail(ErrorKind::internal, "no admissible rotation for the edge normal fan");
  fan.rotation = 2 * std::atan(fan.rotation_tangent.get_d());

  std::vector<Rat2> reps(n);
  std::vector<bool> outer(n);
  for (std::size_t e = 0; e < n; ++e) {
    outer[e] = sgn(rotated[e].x) > 0;
    reps[e] = outer[e] ? rotated[e] : Rat2(-rotated[e]);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sgn(cross(reps[a], reps[b])) > 0;
  });

  fan.position_of_edge.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t e = order[k];
    fan.edge_of.push_back(e);
    fan.outer_flag.push_back(outer[e]);
    fan.normals.push_back(reps[e]);
    Vec2d r = to_double(reps[e]);
    fan.angles.push_back(std::atan2(r.y, r.x));
    fan.position_of_edge[e] = k;
  }
  return fan;
}

// -- opposite vertices ----------------------------------------------------------------

std::vector<AntipodalPair> antipodal_pairs(const ConvexPolygon& p) {
  const std::size_t n = p.size();
  std::vector<Rat2> normal(n);
  for (std::size_t e = 0; e < n; ++e) normal[e] = p.outer_normal(e);

  // Vertex i owns the open normal cone (normal[i-1], normal[i]). Sweep the
  // direction u from just after normal[n-1]; i maximizes <., u>, j minimizes it.
  const Rat2& start = normal[n - 1];
  const Rat2 ahead = perp(start);
  std::size_t j = 0;
  for (std::size_t v = 1; v < n; ++v) {
    Rational dv = dot(p.vertex(v), start);
    Rational dj = dot(p.vertex(j), start);
    if (dv < dj || (dv == dj && dot(p.vertex(v), ahead) < dot(p.vertex(j), ahead))) j = v;
  }
  std::size_t i = 0;

  std::vector<AntipodalPair> pairs;
  Rat2 current = start;
  std::size_t steps_i = 0;
  while (steps_i < n) {
    const Rat2& end_i = normal[i];
    const Rat2 end_j = -normal[j];
    int c = sgn(cross(end_i, end_j));
    Rat2 next = c >= 0 ? end_i : end_j;
    pairs.push_back({i, j, current, next});
    if (c >= 0) {
      i = (i + 1) % n;
      ++steps_i;
    }
    if (c <= 0) j = (j + 1) % n;
    current = next;
  }
  return pairs;
}

bool are_opposite_vertices(const ConvexPolygon& p, std::size_t i, std::size_t j) {
  const std::size_t n = p.size();
  i %= n;
  j %= n;
  if (i == j) return false;
  Rat2 a0 = p.outer_normal(i + n - 1);
  Rat2 a1 = p.outer_normal(i);
  Rat2 b0 = -p.outer_normal(j + n - 1);
  Rat2 b1 = -p.outer_normal(j);
  return strictly_between(b0, a0, a1) || strictly_between(a0, b0, b1) || same_direction(a0, b0);
}

std::optional<LongEdge> find_long_edge(const ConvexPolygon& p) {
  const std::size_t n = p.size();
  for (const AntipodalPair& pr : antipodal_pairs(p)) {
    if ((pr.max_vertex + 1) % n == pr.min_vertex) return LongEdge{pr.max_vertex, pr.witness()};
    if ((pr.min_vertex + 1) % n == pr.max_vertex) return LongEdge{pr.min_vertex, -pr.witness()};
  }
  return std::nullopt;
}

std::optional<Rat2> central_symmetry_center(const ConvexPolygon& p) {
  const std::size_t n = p.size();
  if (n % 2 != 0) return std::nullopt;
  const Rat2 twice = p.vertex(0) + p.vertex(n / 2);
  for (std::size_t i = 1; i < n / 2; ++i)
    if (!(p.vertex(i) + p.vertex(i + n / 2) == twice)) return std::nullopt;
  return Rat2(twice.x / 2, twice.y / 2);
}

double diameter(const ConvexPolygon& p) {
  Rational best = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      Rat2 d = p.vertex(i) - p.vertex(j);
      Rational l = dot(d, d);
      if (l > best) best = l;
    }
  return std::sqrt(best.get_d());
}

// -- SmoothBody -------------------------------------------------------------------------

SmoothBody SmoothBody::fourier(double a0, std::vector<FourierTerm> terms) {
  SmoothBody b;
  b.kind_ = Kind::fourier;
  b.a0_ = a0;
  for (const FourierTerm& t : terms) {
    if (t.order < 1) fail(ErrorKind::invalid_argument, "fourier term order must be >= 1");
    if (!std::isfinite(t.a) || !std::isfinite(t.b)) fail(ErrorKind::invalid_argument, "non-finite fourier coefficient");
  }
  std::sort(terms.begin(), terms.end(), [](const FourierTerm& x, const FourierTerm& y) { return x.order < y.order; });
  // merge repeated orders
  for (const FourierTerm& t : terms) {
    if (!b.terms_.empty() && b.terms_.back().order == t.order) {
      b.terms_.back().a += t.a;
      b.terms_.back().b += t.b;
    } else {
      b.terms_.push_back(t);
    }
  }
  constexpr int grid = 4096;
  for (int k = 0; k < grid; ++k) {
    double phi = two_pi * k / grid;
    double radius = a0;
    for (const FourierTerm& t : b.terms_) {
      double j = t.order;
      radius += (1 - j * j) * (t.a * std::cos(j * phi) + t.b * std::sin(j * phi));
    }
    if (!(radius > 0)) fail(ErrorKind::invalid_argument, "fourier body is not strictly convex (h + h'' <= 0)");
  }
  return b;
}

SmoothBody SmoothBody::arcgon(std::vector<Arc> arcs) {
  if (arcs.empty()) fail(ErrorKind::invalid_argument, "arcgon needs at least one arc");
  double total = 0;
  double scale = 1;
  for (Arc& a : arcs) {
    if (!(a.radius > 0)) fail(ErrorKind::invalid_argument, "arc radius must be positive");
    double width = a.to - a.from;
    if (!(width > 0)) fail(ErrorKind::invalid_argument, "arc normal interval must be nonempty");
    a.from = wrap_angle(a.from);
    a.to = a.from + width;
    total += width;
    scale = std::max({scale, a.radius, std::abs(a.center.x), std::abs(a.center.y)});
  }
  if (std::abs(total - two_pi) > 1e-9) fail(ErrorKind::invalid_argument, "arc normal intervals must cover the circle once");
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.from < y.from; });
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    const Arc& b = arcs[(i + 1) % arcs.size()];
    if (std::abs(wrap_angle(a.to - b.from + std::numbers::pi) - std::numbers::pi) > 1e-9)
      fail(ErrorKind::invalid_argument, "arc normal intervals are not contiguous");
    Vec2d end = a.center + a.radius * unit(a.to);
    Vec2d begin = b.center + b.radius * unit(b.from);
    if (norm(end - begin) > 1e-9 * scale) fail(ErrorKind::invalid_argument, "arcs are not tangent-continuous");
  }
  SmoothBody body;
  body.kind_ = Kind::arcgon;
  body.arcs_ = std::move(arcs);
  return body;
}

SmoothBody SmoothBody::circle(Vec2d center, double radius) {
  if (!(radius > 0)) fail(ErrorKind::invalid_argument, "circle radius must be positive");
  std::vector<FourierTerm> terms;
  if (center.x != 0 || center.y != 0) terms.push_back({1, center.x, center.y});
  return fourier(radius, std::move(terms));
}

std::size_t SmoothBody::arc_at(double phi) const {
  double w = wrap_angle(phi);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (wrap_angle(w - arcs_[i].from) < arcs_[i].to - arcs_[i].from) return i;
  }
  // rounding at a breakpoint: take the nearest arc start
  std::size_t best = 0;
  double gap = two_pi;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    double g = std::min(wrap_angle(w - arcs_[i].from), wrap_angle(arcs_[i].from - w));
    if (g < gap) {
      gap = g;
      best = i;
    }
  }
  return best;
}

double SmoothBody::support(double phi) const {
  if (kind_ == Kind::arcgon) {
    const Arc& a = arcs_[arc_at(phi)];
    return dot(a.center, unit(phi)) + a.radius;
  }
  double h = a0_;
  for (const FourierTerm& t : terms_) h += t.a * std::cos(t.order * phi) + t.b * std::sin(t.order * phi);
  return h;
}

double SmoothBody::support_derivative(double phi) const {
  if (kind_ == Kind::arcgon) {
    const Arc& a = arcs_[arc_at(phi)];
    return dot(a.center, unit_prime(phi));
  }
  double d = 0;
  for (const FourierTerm& t : terms_)
    d += t.order * (-t.a * std::sin(t.order * phi) + t.b * std::cos(t.order * phi));
  return d;
}

Vec2d SmoothBody::boundary_point(double phi) const {
  if (kind_ == Kind::arcgon) {
    const Arc& a = arcs_[arc_at(phi)];
    return a.center + a.radius * unit(phi);
  }
  return support(phi) * unit(phi) + support_derivative(phi) * unit_prime(phi);
}

SmoothBody SmoothBody::translated(Vec2d t) const {
  SmoothBody b = *this;
  if (kind_ == Kind::arcgon) {
    for (Arc& a : b.arcs_) a.center = a.center + t;
    return b;
  }
  auto it = std::find_if(b.terms_.begin(), b.terms_.end(), [](const FourierTerm& x) { return x.order == 1; });
  if (it == b.terms_.end()) {
    b.terms_.insert(b.terms_.begin(), FourierTerm{1, t.x, t.y});
  } else {
    it->a += t.x;
    it->b += t.y;
  }
  return b;
}

SmoothBody SmoothBody::rotated(double angle) const {
  SmoothBody b = *this;
  if (kind_ == Kind::arcgon) {
    const double c = std::cos(angle), s = std::sin(angle);
    for (Arc& a : b.arcs_) {
      a.center = {c * a.center.x - s * a.center.y, s * a.center.x + c * a.center.y};
      double width = a.to - a.from;
      a.from = wrap_angle(a.from + angle);
      a.to = a.from + width;
    }
    std::sort(b.arcs_.begin(), b.arcs_.end(), [](const Arc& x, const Arc& y) { return x.from < y.from; });
    return b;
  }
  // h_new(phi) = h(phi - angle)
  for (FourierTerm& t : b.terms_) {
    const double c = std::cos(t.order * angle), s = std::sin(t.order * angle);
    const double a = t.a, bb = t.b;
    t.a = a * c - bb * s;
    t.b = a * s + bb * c;
  }
  return b;
}

SmoothBody SmoothBody::reflected(Vec2d z) const {
  SmoothBody b = *this;
  if (kind_ == Kind::arcgon) {
    for (Arc& a : b.arcs_) {
      a.center = 2.0 * z - a.center;
      double width = a.to - a.from;
      a.from = wrap_angle(a.from + std::numbers::pi);
      a.to = a.from + width;
    }
    std::sort(b.arcs_.begin(), b.arcs_.end(), [](const Arc& x, const Arc& y) { return x.from < y.from; });
    return b;
  }
  // h(2z - K, u) = h(K, -u) + 2<z, u>
  for (FourierTerm& t : b.terms_) {
    if (t.order % 2 != 0) {
      t.a = -t.a;
      t.b = -t.b;
    }
  }
  return b.translated(2.0 * z);
}

std::vector<Vec2d> SmoothBody::boundary_samples(std::size_t n) const {
  std::vector<Vec2d> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(boundary_point(two_pi * static_cast<double>(k) / static_cast<double>(n)));
  return out;
}

double SmoothBody::diameter_estimate() const {
  double best = 0;
  constexpr int grid = 2048;
  for (int k = 0; k < grid; ++k) {
    double phi = std::numbers::pi * k / grid;
    best = std::max(best, support(phi) + support(phi + std::numbers::pi));
  }
  return best;
}

SmoothSupport support(const SmoothBody& k, Vec2d direction) {
  double len = norm(direction);
  if (!(len > 0)) fail(ErrorKind::invalid_argument, "support direction must be nonzero");
  double phi = std::atan2(direction.y, direction.x);
  return {k.support(phi), k.boundary_point(phi)};
}

std::optional<Vec2d> central_symmetry_center(const SmoothBody& k) {
  if (k.kind() == SmoothBody::Kind::fourier) {
    Vec2d center{0, 0};
    for (const FourierTerm& t : k.terms()) {
      if (t.order == 1) {
        center = {t.a, t.b};
      } else if (t.order % 2 == 1 && (t.a != 0 || t.b != 0)) {
        return std::nullopt;
      }
    }
    return center;
  }
  auto odd = [&](double phi) { return 0.5 * (k.support(phi) - k.support(phi + std::numbers::pi)); };
  // odd part equals <c, u> exactly when K is symmetric about c
  Vec2d c{odd(0.0), odd(std::numbers::pi / 2)};
  double scale = std::max(1.0, k.diameter_estimate());
  constexpr int grid = 2048;
  for (int i = 0; i < grid; ++i) {
    double phi = std::numbers::pi * (i + 0.5) / grid;
    if (std::abs(odd(phi) - dot(c, unit(phi))) > 1e-9 * scale) return std::nullopt;
  }
  return c;
}

double distance_to_body(const SmoothBody& k, Vec2d x) {
  auto excess = [&](double phi) { return dot(x, unit(phi)) - k.support(phi); };
  constexpr int grid = 4096;
  double best = -std::numeric_limits<double>::infinity();
  int best_k = 0;
  for (int i = 0; i < grid; ++i) {
    double e = excess(two_pi * i / grid);
    if (e > best) {
      best = e;
      best_k = i;
    }
  }
  if (best <= 0) return 0;
  // golden-section refinement on the bracketing cells
  double lo = two_pi * (best_k - 1) / grid;
  double hi = two_pi * (best_k + 1) / grid;
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
  for (int it = 0; it < 60; ++it) {
    if (excess(c) > excess(d)) {
      hi = d;
    } else {
      lo = c;
    }
    c = hi - g * (hi - lo);
    d = lo + g * (hi - lo);
  }
  return std::max(best, excess(0.5 * (lo + hi)));
}

// -- arc smoothing -------------------------------------------------------------------

namespace {

struct EdgeGeometry {
  double length;
  double normal_angle;
  Vec2d mid;
  Vec2d unit_normal;
};

std::vector<EdgeGeometry> edge_geometry(const ConvexPolygon& q) {
  std::vector<EdgeGeometry> out;
  for (std::size_t e = 0; e < q.size(); ++e) {
    Vec2d a = to_double(q.vertex(e));
    Vec2d b = to_double(q.vertex(e + 1));
    Vec2d n = to_double(q.outer_normal(e));
    double len = norm(b - a);
    out.push_back({len, std::atan2(n.y, n.x), 0.5 * (a + b), (1.0 / norm(n)) * n});
  }
  return out;
}

// exterior angle at vertex e+1 between edges e and e+1
double exterior_angle(const std::vector<EdgeGeometry>& g, std::size_t e) {
  return wrap_angle(g[(e + 1) % g.size()].normal_angle - g[e].normal_angle);
}

}  // namespace

double minimal_arc_radius(const ConvexPolygon& q) {
  auto g = edge_geometry(q);
  double bound = 0;
  for (const auto& e : g) bound = std::max(bound, e.length / 2);
  for (std::size_t e = 0; e < g.size(); ++e) {
    const double l1 = g[e].length, l2 = g[(e + 1) % g.size()].length;
    const double ext = exterior_angle(g, e);
    auto turn = [&](double r) { return std::asin(std::min(1.0, l1 / (2 * r))) + std::asin(std::min(1.0, l2 / (2 * r))); };
    double lo = std::max(l1, l2) / 2;
    if (turn(lo) < ext) {
      bound = std::max(bound, lo);
      continue;
    }
    double hi = lo * 2;
    while (turn(hi) >= ext) hi *= 2;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (turn(mid) >= ext ? lo : hi) = mid;
    }
    bound = std::max(bound, hi);
  }
  return bound;
}

SmoothBody smooth_by_arcs(const ConvexPolygon& q, double radius, double corner_radius) {
  if (!(radius > minimal_arc_radius(q)))
    fail(ErrorKind::radius_too_small, "arc radius " + std::to_string(radius) + " is below the admissible bound");
  const double diam = diameter(q);
  if (corner_radius < 0) corner_radius = diam * diam / (1000 * radius);
  if (!(corner_radius > 0)) fail(ErrorKind::invalid_argument, "corner radius must be positive");

  auto g = edge_geometry(q);
  const std::size_t n = g.size();
  std::vector<double> beta(n);
  for (std::size_t e = 0; e < n; ++e) beta[e] = std::asin(g[e].length / (2 * radius));

  std::vector<Arc> arcs;
  for (std::size_t e = 0; e < n; ++e) {
    const double half = g[e].length / 2;
    const double offset = std::sqrt(radius * radius - half * half);
    Vec2d center = g[e].mid - offset * g[e].unit_normal;
    arcs.push_back({center, radius + corner_radius, g[e].normal_angle - beta[e], g[e].normal_angle + beta[e]});
    // rounded vertex e+1
    const std::size_t f = (e + 1) % n;
    const double from = g[e].normal_angle + beta[e];
    const double width = exterior_angle(g, e) - beta[e] - beta[f];
    arcs.push_back({to_double(q.vertex(e + 1)), corner_radius, from, from + width});
  }
  return SmoothBody::arcgon(std::move(arcs));
}

std::vector<double> arcgon_breakpoints(const SmoothBody& k) {
  std::vector<double> out;
  for (const Arc& a : k.arcs()) {
    out.push_back(wrap_angle(a.from));
    out.push_back(wrap_angle(a.from + std::numbers::pi));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double x, double y) { return std::abs(x - y) < 1e-15; }), out.end());
  return out;
}

std::vector<Vec2d> arcgon_boundary(const SmoothBody& k, std::size_t per_arc) {
  if (k.kind() != SmoothBody::Kind::arcgon) fail(ErrorKind::invalid_argument, "arcgon body expected");
  std::vector<Vec2d> out;
  for (const Arc& a : k.arcs()) {
    for (std::size_t j = 0; j < per_arc; ++j) {
      double phi = a.from + (a.to - a.from) * static_cast<double>(j) / static_cast<double>(per_arc);
      out.push_back(a.center + a.radius * unit(phi));
    }
  }
  return out;
}

}  // namespace hedgehog
