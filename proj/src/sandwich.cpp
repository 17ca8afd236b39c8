#include "hedgehog/body.hpp"

#include "hedgehog/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace hedgehog {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int direction_bits = 20;
constexpr int vertex_bits = 30;
constexpr int max_attempts = 24;

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Exact rational unit vector close to angle theta.
Rat2 rational_direction(double theta) {
  theta = wrap_angle(theta + pi) - pi;  // (-pi, pi]
  bool flip = std::abs(theta) > pi / 2;
  if (flip) theta = theta > 0 ? theta - pi : theta + pi;
  Rational t = dyadic(std::tan(theta / 2), direction_bits);
  Rational d = 1 + t * t;
  Rat2 u((1 - t * t) / d, 2 * t / d);
  return flip ? Rat2(-u) : u;
}

Rational support_value(const ConvexPolygon& k, const Rat2& u) { return support(k, u).value; }

Rational support_value(const SmoothBody& k, const Rat2& u) {
  Vec2d d = to_double(u);
  double len = norm(d);
  double h = k.support(std::atan2(d.y, d.x)) * len;
  // round outward, well past double error
  return dyadic(h + 1e-12 * (1 + std::abs(h)), 40, +1);
}

// Intersection of {<x,a> = ha} and {<x,b> = hb}.
Rat2 meet(const Rat2& a, const Rational& ha, const Rat2& b, const Rational& hb) {
  Rational det = cross(a, b);
  return {(ha * b.y - hb * a.y) / det, (a.x * hb - b.x * ha) / det};
}

std::optional<ConvexPolygon> polygon_from_lines(const std::vector<Rat2>& normals, const std::vector<Rational>& offsets,
                                                double scale) {
  const std::size_t n = normals.size();
  std::vector<Rat2> pts;
  for (std::size_t i = 0; i < n; ++i) {
    Rat2 v = meet(normals[i], offsets[i], normals[(i + 1) % n], offsets[(i + 1) % n]);
    // snap outward is not needed: containment is re-verified below
    int bits = vertex_bits - static_cast<int>(std::ceil(std::log2(std::max(scale, 1e-300))));
    pts.emplace_back(dyadic(v.x.get_d(), bits), dyadic(v.y.get_d(), bits));
  }
  auto idx = convex_hull_indices(pts);
  if (idx.size() != n) return std::nullopt;
  return ConvexPolygon::hull_of(pts);
}

bool valid_sandwich(const Body& k, const ConvexPolygon& p, double eps) {
  return inside_interior(k, p) && inside_neighborhood(p, k, eps) && !has_parallel_edges(p) && !has_long_edge(p);
}

std::vector<double> sorted_unique(std::vector<double> angles) {
  for (double& a : angles) a = wrap_angle(a);
  std::sort(angles.begin(), angles.end());
  return angles;
}

// Inserts angles so that no cyclic gap exceeds max_gap.
std::vector<double> fill_gaps(const std::vector<double>& angles, double max_gap, std::mt19937_64& rng) {
  std::vector<double> out;
  const std::size_t n = angles.size();
  for (std::size_t i = 0; i < n; ++i) {
    double a = angles[i];
    double b = i + 1 < n ? angles[i + 1] : angles[0] + 2 * pi;
    out.push_back(a);
    double gap = b - a;
    auto extra = static_cast<std::size_t>(std::ceil(gap / max_gap)) - 1;
    for (std::size_t j = 1; j <= extra; ++j) {
      double jitter = (uniform(rng) - 0.5) * 0.2 / static_cast<double>(extra + 1);
      out.push_back(a + gap * (static_cast<double>(j) / static_cast<double>(extra + 1) + jitter));
    }
  }
  return sorted_unique(out);
}

template <typename K>
ConvexPolygon circumscribe(const K& k, const std::vector<double>& angles, const Rational& delta, double scale) {
  std::vector<Rat2> normals;
  std::vector<Rational> offsets;
  for (double a : angles) {
    Rat2 u = rational_direction(a);
    normals.push_back(u);
    offsets.push_back(support_value(k, u) + delta);
  }
  auto p = polygon_from_lines(normals, offsets, scale);
  if (!p) fail(ErrorKind::approximation_failure, "support lines do not form a polygon");
  return *p;
}

}  // namespace

ConvexPolygon sandwich_polygon(const ConvexPolygon& k, double eps, std::uint64_t seed) {
  if (!(eps > 0) || !std::isfinite(eps)) fail(ErrorKind::invalid_argument, "epsilon must be positive");
  std::mt19937_64 rng(seed);
  const double diam = diameter(k);
  const Rational delta = dyadic(eps / 2, 40, -1);
  double eta = std::min(0.2, 0.45 * eps / diam);
  const Body body = k;

  std::vector<double> normals;
  for (std::size_t e = 0; e < k.size(); ++e) {
    Vec2d n = to_double(k.outer_normal(e));
    normals.push_back(std::atan2(n.y, n.x));
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<double> angles;
    for (double th : normals) {
      angles.push_back(th - eta * (0.6 + 0.4 * uniform(rng)));
      angles.push_back(th + eta * (0.6 + 0.4 * uniform(rng)));
    }
    angles = fill_gaps(sorted_unique(angles), pi / 2, rng);
    try {
      ConvexPolygon p = circumscribe(k, angles, delta, diam);
      if (valid_sandwich(body, p, eps)) return p;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::approximation_failure && e.kind() != ErrorKind::invalid_argument) throw;
    }
    eta *= 0.8;
  }
  fail(ErrorKind::approximation_failure, "no verified sandwich polygon after " + std::to_string(max_attempts) + " attempts");
}

ConvexPolygon sandwich_polygon(const SmoothBody& k, double eps, std::uint64_t seed) {
  if (!(eps > 0) || !std::isfinite(eps)) fail(ErrorKind::invalid_argument, "epsilon must be positive");
  std::mt19937_64 rng(seed);
  const double diam = k.diameter_estimate();
  const Rational delta = dyadic(eps / 2, 40, -1);
  const Body body = k;
  std::size_t n = 16;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<double> angles;
    const double step = 2 * pi / static_cast<double>(n);
    const double phase = uniform(rng) * step;
    for (std::size_t i = 0; i < n; ++i)
      angles.push_back(phase + step * (static_cast<double>(i) + 0.3 * (uniform(rng) - 0.5)));
    try {
      ConvexPolygon p = circumscribe(k, sorted_unique(angles), delta, diam);
      if (valid_sandwich(body, p, eps)) return p;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::approximation_failure && e.kind() != ErrorKind::invalid_argument) throw;
    }
    if (attempt % 3 == 2) n *= 2;
  }
  fail(ErrorKind::approximation_failure, "no verified sandwich polygon after " + std::to_string(max_attempts) + " attempts");
}

ConvexPolygon sandwich_polygon(const Body& k, double eps, std::uint64_t seed) {
  return std::visit([&](const auto& b) { return sandwich_polygon(b, eps, seed); }, k);
}

bool inside_interior(const ConvexPolygon& k, const ConvexPolygon& p) {
  return std::all_of(k.vertices().begin(), k.vertices().end(), [&](const Rat2& v) { return p.contains_strictly(v); });
}

bool inside_interior(const SmoothBody& k, const ConvexPolygon& p) {
  for (std::size_t e = 0; e < p.size(); ++e) {
    Rat2 n = p.outer_normal(e);
    Vec2d d = to_double(n);
    double h = k.support(std::atan2(d.y, d.x)) * norm(d);
    double hp = dot(to_double(p.vertex(e)), d);
    if (!(h < hp - 1e-12 * (1 + std::abs(hp)))) return false;
  }
  return true;
}

bool inside_interior(const Body& k, const ConvexPolygon& p) {
  return std::visit([&](const auto& b) { return inside_interior(b, p); }, k);
}

bool inside_neighborhood(const ConvexPolygon& p, const ConvexPolygon& k, const Rational& eps) {
  const Rational eps2 = eps * eps;
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](const Rat2& v) { return k.squared_distance(v) < eps2; });
}

bool inside_neighborhood(const ConvexPolygon& p, const SmoothBody& k, double eps) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](const Rat2& v) { return distance_to_body(k, to_double(v)) < eps * (1 - 1e-12); });
}

bool inside_neighborhood(const ConvexPolygon& p, const Body& k, double eps) {
  if (const auto* poly = std::get_if<ConvexPolygon>(&k)) return inside_neighborhood(p, *poly, exact_rational(eps));
  return inside_neighborhood(p, std::get<SmoothBody>(k), eps);
}

}  // namespace hedgehog
