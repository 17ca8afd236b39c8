#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include "hedgehog/body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using hedgehog::ConvexPolygon;
using hedgehog::Rat2;
using hedgehog::Rational;

inline Rational cross3(const Rat2& a, const Rat2& b, const Rat2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool on_closed_segment(const Rat2& x, const Rat2& a, const Rat2& b) {
  if (cross3(a, b, x) != 0) return false;
  return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= x.y &&
         x.y <= std::max(a.y, b.y);
}

/// Exposed points of a finite set: x is extreme iff the directions from x to
/// the other points, sorted by exact angle, leave a gap wider than pi.
inline std::set<std::pair<Rational, Rational>> extreme_points(const std::vector<Rat2>& pts) {
  std::vector<Rat2> u;
  for (const Rat2& p : pts)
    if (std::find(u.begin(), u.end(), p) == u.end()) u.push_back(p);
  auto upper = [](const Rat2& d) { return d.y > 0 || (d.y == 0 && d.x > 0); };
  std::set<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<Rat2> d;
    for (std::size_t j = 0; j < u.size(); ++j)
      if (j != i) d.push_back(u[j] - u[i]);
    bool extreme = d.empty();
    if (!extreme) {
      std::sort(d.begin(), d.end(), [&](const Rat2& a, const Rat2& b) {
        if (upper(a) != upper(b)) return upper(a);
        return a.x * b.y - a.y * b.x > 0;
      });
      bool one_ray = true;
      for (std::size_t k = 0; k < d.size(); ++k) {
        const Rat2& a = d[k];
        const Rat2& b = d[(k + 1) % d.size()];
        Rational c = a.x * b.y - a.y * b.x;
        if (c < 0) extreme = true;
        if (c != 0 || a.x * b.x + a.y * b.y < 0) one_ray = false;
      }
      extreme = extreme || one_ray;
    }
    if (extreme) out.insert({u[i].x, u[i].y});
  }
  return out;
}

/// Extreme points in counterclockwise order around their centroid.
inline std::vector<Rat2> ordered_hull(const std::vector<Rat2>& pts) {
  std::vector<Rat2> v;
  for (const auto& [x, y] : extreme_points(pts)) v.push_back({x, y});
  if (v.empty()) return v;
  Rat2 c{0, 0};
  for (const Rat2& x : v) c = c + x;
  c = Rational(1, static_cast<long>(v.size())) * c;
  auto half = [&](const Rat2& x) { return x.y > c.y || (x.y == c.y && x.x > c.x) ? 0 : 1; };
  std::sort(v.begin(), v.end(), [&](const Rat2& a, const Rat2& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross3(c, a, b) > 0;
  });
  return v;
}

/// Parameter interval of the segment p + s (q - p), s in [0, 1], inside a
/// counterclockwise convex polygon (Cyrus-Beck), or nullopt.
inline std::optional<std::pair<Rational, Rational>> segment_inside(const std::vector<Rat2>& poly, const Rat2& p,
                                                                   const Rat2& q) {
  Rational lo = 0, hi = 1;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Rat2& a = poly[i];
    const Rat2& b = poly[(i + 1) % poly.size()];
    // inside means cross3(a, b, x) >= 0, affine in s
    Rational f0 = cross3(a, b, p), f1 = cross3(a, b, q);
    Rational slope = f1 - f0;
    if (slope == 0) {
      if (f0 < 0) return std::nullopt;
    } else {
      Rational root = -f0 / slope;
      if (slope > 0) lo = std::max(lo, root);
      else hi = std::min(hi, root);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

/// Whether A u B is convex, for convex A, B that share a point o: the union
/// is star-shaped about o, so it is convex iff every edge of conv(A u B) is
/// covered by the two sets.
inline bool union_is_convex(const std::vector<Rat2>& a, const std::vector<Rat2>& b) {
  std::vector<Rat2> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::vector<Rat2> c = ordered_hull(all);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Rat2& p = c[i];
    const Rat2& q = c[(i + 1) % c.size()];
    auto ia = segment_inside(a, p, q), ib = segment_inside(b, p, q);
    std::vector<std::pair<Rational, Rational>> parts;
    if (ia) parts.push_back(*ia);
    if (ib) parts.push_back(*ib);
    std::sort(parts.begin(), parts.end());
    Rational reach = 0;
    for (const auto& [lo, hi] : parts) {
      if (lo > reach) return false;
      reach = std::max(reach, hi);
    }
    if (reach < 1) return false;
  }
  return true;
}

/// Twice the signed area of a closed cycle.
inline Rational shoelace2(const std::vector<Rat2>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i].x * v[(i + 1) % v.size()].y - v[(i + 1) % v.size()].x * v[i].y;
  return s;
}

/// Area of P n Q from its candidate vertices: vertices of either polygon
/// inside the other, plus proper edge crossings.
inline Rational intersection_area(const std::vector<Rat2>& p, const std::vector<Rat2>& q) {
  auto inside = [](const Rat2& x, const std::vector<Rat2>& poly) {
    for (std::size_t i = 0; i < poly.size(); ++i)
      if (cross3(poly[i], poly[(i + 1) % poly.size()], x) < 0) return false;
    return true;
  };
  std::vector<Rat2> cand;
  for (const Rat2& v : p)
    if (inside(v, q)) cand.push_back(v);
  for (const Rat2& v : q)
    if (inside(v, p)) cand.push_back(v);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rat2 &a = p[i], &b = p[(i + 1) % p.size()];
    for (std::size_t j = 0; j < q.size(); ++j) {
      const Rat2 &c = q[j], &d = q[(j + 1) % q.size()];
      Rational den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
      if (den == 0) continue;
      Rational t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
      Rational s = ((c.x - a.x) * (b.y - a.y) - (c.y - a.y) * (b.x - a.x)) / den;
      if (t >= 0 && t <= 1 && s >= 0 && s <= 1) cand.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  std::vector<Rat2> v = ordered_hull(cand);
  if (v.size() < 3) return 0;
  return shoelace2(v) / 2;
}

/// Support value by scanning all vertices.
inline Rational support(const std::vector<Rat2>& v, const Rat2& u) {
  Rational best = v[0].x * u.x + v[0].y * u.y;
  for (const Rat2& p : v) best = std::max(best, Rational(p.x * u.x + p.y * u.y));
  return best;
}

/// Vertices attaining the support value.
inline std::vector<std::size_t> face(const std::vector<Rat2>& v, const Rat2& u) {
  Rational h = support(v, u);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].x * u.x + v[i].y * u.y == h) out.push_back(i);
  return out;
}

struct Corner {
  Rat2 location;
  bool weak = false;
};

/// Middle hedgehog corners by a direction sweep: sort the half-turn
/// reduced edge directions by angle (double atan2), probe one direction
/// strictly between consecutive normals, take the unique max / min vertices.
/// Weak iff the two flanking edges meet at the maximizing or minimizing vertex.
inline std::vector<Corner> corners(const std::vector<Rat2>& v) {
  const std::size_t n = v.size();
  struct Dir {
    double angle;
    Rat2 normal;
    std::size_t edge;
  };
  std::vector<Dir> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    Rat2 e = v[(i + 1) % n] - v[i];
    Rat2 nrm{e.y, -e.x};
    double a = std::atan2(nrm.y.get_d(), nrm.x.get_d());
    if (a >= std::numbers::pi / 2) {
      a -= std::numbers::pi;
      nrm = -nrm;
    } else if (a < -std::numbers::pi / 2) {
      a += std::numbers::pi;
      nrm = -nrm;
    }
    dirs.push_back({a, nrm, i});
  }
  std::sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) { return a.angle < b.angle; });
  std::vector<Corner> out;
  for (std::size_t k = 0; k < n; ++k) {
    const Dir& a = dirs[k];
    const Dir& b = dirs[(k + 1) % n];
    // normalize both to unit-ish length before summing so the probe is inside the gap
    auto scaled = [](const Rat2& x) {
      double len = std::hypot(x.x.get_d(), x.y.get_d());
      Rational s = hedgehog::exact_rational(1.0 / len);
      return s * x;
    };
    Rat2 w = k + 1 < n ? scaled(a.normal) + scaled(b.normal) : scaled(a.normal) - scaled(b.normal);
    auto fp = face(v, w);
    auto fm = face(v, -w);
    Corner c;
    c.location = hedgehog::midpoint(v[fp.front()], v[fm.front()]);
    auto touches = [&](std::size_t edge, std::size_t vert) { return edge == vert || (edge + 1) % n == vert; };
    for (std::size_t vert : {fp.front(), fm.front()})
      if (touches(a.edge, vert) && touches(b.edge, vert)) c.weak = true;
    out.push_back(c);
  }
  return out;
}

/// Random convex n-gon with integer coordinates: points on a thin annulus of
/// outer radius `range`, sorted by angle, resampled until strictly convex
/// with no two parallel edges.
inline std::vector<Rat2> random_polygon(std::mt19937_64& rng, std::size_t n, long range = 1000) {
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> radius(0.97, 1.0);
  for (;;) {
    std::vector<double> a(n);
    for (double& x : a) x = angle(rng);
    std::sort(a.begin(), a.end());
    std::vector<Rat2> pts;
    for (double t : a) {
      const double r = radius(rng) * static_cast<double>(range);
      pts.emplace_back(std::lround(r * std::cos(t)), std::lround(r * std::sin(t)));
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (cross3(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) <= 0) ok = false;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Rat2 e = pts[(i + 1) % n] - pts[i];
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        Rat2 f = pts[(j + 1) % n] - pts[j];
        if (e.x * f.y - e.y * f.x == 0) ok = false;
      }
    }
    if (ok) return pts;
  }
}

}  // namespace oracle
