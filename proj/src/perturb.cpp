#include "hedgehog/perturb.hpp"

#include "hedgehog/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hedgehog {

namespace {

constexpr int coefficient_bits = 30;
constexpr int lambda_halvings = 40;

Rat2 outer_normal_of(const Rat2& from, const Rat2& to) {
  Rat2 d = to - from;
  return {d.y, -d.x};
}

double angle_between(const Rat2& a, const Rat2& b) {
  return std::abs(std::atan2(cross(a, b).get_d(), dot(a, b).get_d()));
}

Rat2 far_end(const ConvexPolygon& p, std::size_t edge, std::size_t v) {
  return edge == v ? p.vertex(edge + 1) : p.vertex(edge);
}

bool touches(std::size_t edge, std::size_t v, std::size_t n) { return edge == v || (edge + 1) % n == v; }

std::size_t index_of(const ConvexPolygon& p, const Rat2& v) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.vertex(i) == v) return i;
  return p.size();
}

std::vector<Rat2> cut_points(const ConvexPolygon& p, const CutConstruction& c) {
  std::vector<Rat2> pts;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i != c.p_index && i != c.q_index) pts.push_back(p.vertex(i));
  pts.push_back(c.p + c.lambda * c.t1);
  pts.push_back(c.p + c.lambda * c.t2);
  pts.push_back(c.q + c.lambda * c.s1);
  pts.push_back(c.q + c.lambda * c.s2);
  return pts;
}

struct Parameters {
  Rational tau, sigma;
  Rat2 s2, t1, t2;
  Rat2 s_normal;
  double score = 0;
};

// Role-assigned geometry of one cut attempt.
struct Roles {
  std::size_t pv, qv, edge_p, edge_q, edge_j, edge_m;
  Rat2 dP, eQ, dJ, eM;
  int sense;
};

std::optional<Roles> assign_roles(const ConvexPolygon& poly, const MiddleHedgehog& m, std::size_t corner,
                                  std::size_t pv, std::size_t qv) {
  const std::size_t n = poly.size();
  const std::size_t c = m.corners[corner].between;
  const std::size_t e = m.fan.edge_of[c];
  const std::size_t f = m.fan.edge_of[(c + 1) % n];
  Roles r{};
  r.pv = pv;
  r.qv = qv;
  if (touches(e, pv, n) && touches(f, qv, n) && !touches(e, qv, n) && !touches(f, pv, n)) {
    r.edge_p = e;
    r.edge_q = f;
  } else if (touches(f, pv, n) && touches(e, qv, n) && !touches(f, qv, n) && !touches(e, pv, n)) {
    r.edge_p = f;
    r.edge_q = e;
  } else {
    return std::nullopt;
  }
  r.edge_j = r.edge_p == pv ? (pv + n - 1) % n : pv;
  r.edge_m = r.edge_q == qv ? (qv + n - 1) % n : qv;
  const Rat2& p = poly.vertex(pv);
  const Rat2& q = poly.vertex(qv);
  r.dP = far_end(poly, r.edge_p, pv) - p;
  r.eQ = far_end(poly, r.edge_q, qv) - q;
  r.dJ = far_end(poly, r.edge_j, pv) - p;
  r.eM = far_end(poly, r.edge_m, qv) - q;
  r.sense = m.fan.position_of_edge[r.edge_p] == c ? 1 : -1;
  return r;
}

// The ordering dP < q-cut < p-cut < eQ of line directions inside the gap.
bool gap_order(const Roles& r, const Rat2& qcut, const Rat2& pcut) {
  auto rep = [&](const Rat2& d) -> std::optional<Rat2> {
    int s = sgn(cross(r.dP, d)) * r.sense;
    if (s == 0) return std::nullopt;
    return s > 0 ? d : Rat2(-d);
  };
  auto less = [&](const Rat2& a, const Rat2& b) { return sgn(cross(a, b)) * r.sense > 0; };
  auto rq = rep(qcut), rp = rep(pcut), re = rep(r.eQ);
  if (!rq || !rp || !re) return false;
  return less(r.dP, *rq) && less(*rq, *rp) && less(*rp, *re);
}

bool strictly_inside_cone(const Rat2& v, const CutTarget& t) {
  return sgn(cross(t.cone_begin, v)) > 0 && sgn(cross(v, t.cone_end)) > 0;
}

std::vector<Parameters> parameter_candidates(const Roles& r, const Rat2& s1, const Rational& b, const Rational& kappa,
                                             const Rat2& s_dir, const Rat2& s_normal, const CutTarget& target) {
  std::vector<Parameters> out;
  const Rational cross_js = cross(r.dJ, s_dir);
  if (sgn(cross_js) == 0) return out;
  for (int ti = 2; ti <= 8; ++ti) {
    Rational tau = 1 - Rational(1, 1L << ti);
    Rational a_p = dyadic(Rational(tau * kappa).get_d(), coefficient_bits);
    if (sgn(a_p) <= 0 || a_p >= 1) continue;
    Rat2 t2 = a_p * r.dP;
    for (int si = 1; si <= 24; ++si) {
      Rational sigma = 1 + Rational(1, 1L << si);
      Rational a_q = dyadic(Rational(sigma * b).get_d(), coefficient_bits);
      if (a_q <= b || a_q >= 1) continue;
      Rat2 s2 = a_q * r.eQ;
      Rational mu = cross(s1 + t2 - s2, s_dir) / cross_js;
      Rational a_j = dyadic(mu.get_d(), coefficient_bits);
      if (sgn(a_j) <= 0 || a_j >= 1) continue;
      Rat2 t1 = a_j * r.dJ;
      Rat2 qcut = s2 - s1;
      Rat2 pcut = t2 - t1;
      if (!gap_order(r, qcut, pcut)) continue;
      Rat2 w = (s2 + t1) - (s1 + t2);
      if (w.x == 0 && w.y == 0) continue;
      Rat2 nf = perp(w);
      if (sgn(dot(nf, s_normal)) < 0) nf = -nf;
      if (!strictly_inside_cone(nf, target)) continue;
      Parameters prm;
      prm.tau = tau;
      prm.sigma = sigma;
      prm.s2 = s2;
      prm.t1 = t1;
      prm.t2 = t2;
      prm.s_normal = nf;
      prm.score = std::min({angle_between(r.dP, qcut), angle_between(qcut, pcut), angle_between(pcut, r.eQ)});
      prm.score = std::min(prm.score, std::numbers::pi - prm.score);
      out.push_back(std::move(prm));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Parameters& a, const Parameters& b) { return a.score > b.score; });
  return out;
}

bool certify(const ConvexPolygon& poly, const CutConstruction& c, const Body& k, double eps, std::size_t count0,
             ConvexPolygon* result) {
  std::vector<Rat2> pts = cut_points(poly, c);
  if (convex_hull_indices(pts).size() != poly.size() + 2) return false;
  ConvexPolygon next = ConvexPolygon::hull_of(pts);
  if (!inside_interior(k, next) || !inside_neighborhood(next, k, eps)) return false;
  if (has_parallel_edges(next) || has_long_edge(next)) return false;
  const std::size_t a = index_of(next, c.p + c.lambda * c.t2), b = index_of(next, c.q + c.lambda * c.s1);
  const std::size_t a1 = index_of(next, c.p + c.lambda * c.t1), b1 = index_of(next, c.q + c.lambda * c.s2);
  if (!are_opposite_vertices(next, a, b) || !are_opposite_vertices(next, a1, b1)) return false;
  MiddleHedgehog m = polygon_hedgehog(next);
  HedgehogHull h = hedgehog_hull(m);
  if (h.vertex_count() <= count0) return false;
  bool found_y = false, found_z = false;
  for (const Rat2& v : h.hull.vertices()) {
    found_y = found_y || v == c.y;
    found_z = found_z || v == c.z;
  }
  if (!found_y || !found_z) return false;
  *result = std::move(next);
  return true;
}

std::vector<Rat2> normal_variants(const CutTarget& t) {
  const Rat2& a = t.cone_begin;
  const Rat2& b = t.cone_end;
  return {t.s_normal, Rational(3) * a + b, a + Rational(3) * b, Rational(7) * a + b, a + Rational(7) * b};
}

constexpr std::size_t candidate_cuts = 4;

// Worst of: shortest edge and closest pair of hedgehog hull vertices (both
// relative to the diameter), narrowest fan gap over pi. Larger is better conditioned for later cuts and smoothing.
double cut_quality(const ConvexPolygon& p) {
  const double diam = diameter(p);
  double shortest = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < p.size(); ++e) shortest = std::min(shortest, norm(to_double(p.edge_vector(e))));
  EdgeNormalFan fan = edge_normal_fan(p);
  const std::size_t n = fan.size();
  double gap = fan.angles[0] + std::numbers::pi - fan.angles[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) gap = std::min(gap, fan.angles[i + 1] - fan.angles[i]);
  HullPolygon h = hedgehog_hull(polygon_hedgehog(p)).hull;
  double separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h.size(); ++i)
    separation = std::min(separation, norm(to_double(h[(i + 1) % h.size()] - h[i])));
  return std::min({shortest / diam, separation / diam, gap / std::numbers::pi});
}

}  // namespace

std::size_t hull_vertex_count(const ConvexPolygon& p) { return hedgehog_hull(polygon_hedgehog(p)).vertex_count(); }

std::vector<CutTarget> cut_targets(const ConvexPolygon& p) {
  if (central_symmetry_center(p)) fail(ErrorKind::centrally_symmetric, "polygon is centrally symmetric");
  if (auto e = find_long_edge(p)) fail(ErrorKind::long_edge, "edge " + std::to_string(e->edge) + " is an affine diameter");
  MiddleHedgehog m = polygon_hedgehog(p);
  HedgehogHull h = hedgehog_hull(m);
  const std::size_t r = h.hull.size();
  if (r < 3) fail(ErrorKind::internal, "hedgehog hull of a non-symmetric polygon is degenerate");
  const std::size_t n = m.sets.size();
  std::vector<CutTarget> out;
  for (std::size_t v = 0; v < r; ++v) {
    CutTarget t;
    t.x = h.hull[v];
    t.corner = h.corners_at_vertex[v].front();
    t.cone_begin = outer_normal_of(h.hull[(v + r - 1) % r], t.x);
    t.cone_end = outer_normal_of(t.x, h.hull[(v + 1) % r]);
    t.s_normal = t.cone_begin + t.cone_end;
    const std::size_t c = m.corners[t.corner].between;
    t.gap_width = c + 1 < n ? m.fan.angles[c + 1] - m.fan.angles[c] : m.fan.angles[0] + std::numbers::pi - m.fan.angles[n - 1];
    out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(), [](const CutTarget& a, const CutTarget& b) { return a.gap_width > b.gap_width; });
  return out;
}

CutTarget select_cut_target(const ConvexPolygon& p) { return cut_targets(p).front(); }

CutConstruction build_cut(const ConvexPolygon& poly, const CutTarget& target, const Body& k, double eps) {
  if (has_long_edge(poly)) fail(ErrorKind::long_edge, "polygon has a long edge");
  MiddleHedgehog m = polygon_hedgehog(poly);
  const std::size_t count0 = hedgehog_hull(m).vertex_count();
  const Corner& corner = m.corners.at(target.corner);
  if (corner.kind != CornerKind::strong) fail(ErrorKind::internal, "cut target is not a strong corner");

  for (const Rat2& s_normal : normal_variants(target)) {
    if (!strictly_inside_cone(s_normal, target)) continue;
    const Rat2 s_dir = perp(s_normal);
    // the vertex the normal of S leans toward takes the s-vectors first
    std::size_t lean = sgn(dot(s_normal, poly.vertex(corner.q) - target.x)) > 0 ? corner.q : corner.p;
    std::size_t other = lean == corner.q ? corner.p : corner.q;
    for (auto [pv, qv] : {std::pair{other, lean}, std::pair{lean, other}}) {
      auto roles = assign_roles(poly, m, target.corner, pv, qv);
      if (!roles) continue;
      const Roles& r = *roles;
      const Rational den = cross(r.eQ, r.dP);
      if (sgn(den) == 0) continue;
      const Rational ratio = cross(r.eM, r.dP) / den;
      const Rational kappa1 = dot(ratio * r.eQ - r.eM, r.dP) / dot(r.dP, r.dP);
      if (sgn(ratio) <= 0 || sgn(kappa1) <= 0) continue;
      Rational a_m(1, 2);
      while (a_m * ratio > Rational(1, 2) || a_m * kappa1 > Rational(1, 2)) a_m /= 2;
      const Rational b = a_m * ratio;
      const Rat2 s1 = a_m * r.eM;
      const Rat2 s = b * r.eQ;
      const Rat2 t = s - s1;
      const Rational kappa = a_m * kappa1;

      auto params = parameter_candidates(r, s1, b, kappa, s_dir, s_normal, target);
      const std::size_t tries = std::min<std::size_t>(params.size(), 3);
      for (std::size_t pi = 0; pi < tries; ++pi) {
        const Parameters& prm = params[pi];
        CutConstruction c;
        c.x = target.x;
        c.p_index = r.pv;
        c.q_index = r.qv;
        c.p = poly.vertex(r.pv);
        c.q = poly.vertex(r.qv);
        c.edge_p = r.edge_p;
        c.edge_q = r.edge_q;
        c.edge_j = r.edge_j;
        c.edge_m = r.edge_m;
        c.s_normal = prm.s_normal;
        c.tau = prm.tau;
        c.sigma = prm.sigma;
        c.s = s;
        c.s1 = s1;
        c.s2 = prm.s2;
        c.t = t;
        c.t1 = prm.t1;
        c.t2 = prm.t2;
        Rational lambda(1);
        for (int h = 0; h <= lambda_halvings; ++h, lambda /= 2) {
          c.lambda = lambda;
          c.y = midpoint(c.p + lambda * c.t2, c.q + lambda * c.s1);
          c.z = midpoint(c.p + lambda * c.t1, c.q + lambda * c.s2);
          ConvexPolygon next = poly;
          if (certify(poly, c, k, eps, count0, &next)) return c;
        }
      }
    }
  }
  fail(ErrorKind::search_exhausted, "no verified cut at corner (" + to_string(target.x.x) + ", " + to_string(target.x.y) + ")");
}

ConvexPolygon apply_cut(const ConvexPolygon& p, const CutConstruction& cut) {
  if (cut.p_index >= p.size() || cut.q_index >= p.size() || !(p.vertex(cut.p_index) == cut.p) ||
      !(p.vertex(cut.q_index) == cut.q))
    fail(ErrorKind::invalid_argument, "cut does not match the polygon");
  std::vector<Rat2> pts = cut_points(p, cut);
  if (convex_hull_indices(pts).size() != p.size() + 2)
    fail(ErrorKind::invalid_argument, "cut points are not in convex position");
  return ConvexPolygon::hull_of(pts);
}

PerturbationTrace increase_hull_vertices(const Body& k, double eps, std::size_t target, std::uint64_t seed) {
  if (!(eps > 0)) fail(ErrorKind::invalid_argument, "epsilon must be positive");
  const bool symmetric = std::visit(
      [](const auto& b) { return central_symmetry_center(b).has_value(); }, k);
  if (symmetric) fail(ErrorKind::centrally_symmetric, "body is centrally symmetric");

  PerturbationTrace trace;
  trace.eps = eps;
  trace.target = target;
  trace.seed = seed;
  ConvexPolygon p = sandwich_polygon(k, eps, seed);
  std::size_t count = hull_vertex_count(p);
  trace.steps.push_back({p, count, std::nullopt, true, true});
  while (count <= target) {
    std::optional<CutConstruction> cut;
    std::optional<ConvexPolygon> next_best;
    double best = -1;
    std::size_t built = 0;
    for (const CutTarget& t : cut_targets(p)) {
      if (built == candidate_cuts) break;
      try {
        CutConstruction c = build_cut(p, t, k, eps);
        ConvexPolygon n = apply_cut(p, c);
        ++built;
        double q = cut_quality(n);
        if (q > best) {
          best = q;
          cut = std::move(c);
          next_best = std::move(n);
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::search_exhausted) throw;
      }
    }
    if (!cut) fail(ErrorKind::search_exhausted, "no hull vertex admits a verified cut");
    ConvexPolygon next = std::move(*next_best);
    std::size_t next_count = hull_vertex_count(next);
    if (next_count <= count) fail(ErrorKind::invariant_regression, "hull vertex count did not increase");
    p = std::move(next);
    count = next_count;
    trace.steps.push_back({p, count, cut, inside_interior(k, p), inside_neighborhood(p, k, eps)});
  }
  return trace;
}

void check_trace(const PerturbationTrace& trace, const Body& k) {
  if (trace.steps.empty()) fail(ErrorKind::invalid_argument, "empty trace");
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    const std::string at = "step " + std::to_string(i);
    if (!inside_interior(k, s.polygon) || !inside_neighborhood(s.polygon, k, trace.eps))
      fail(ErrorKind::internal, at + ": containment fails");
    if (hull_vertex_count(s.polygon) != s.count) fail(ErrorKind::internal, at + ": recorded count is wrong");
    if (i == 0) continue;
    if (!s.cut) fail(ErrorKind::internal, at + ": missing cut");
    if (s.count <= trace.steps[i - 1].count) fail(ErrorKind::invariant_regression, at + ": count did not increase");
    const CutConstruction& c = *s.cut;
    if (!(apply_cut(trace.steps[i - 1].polygon, c) == s.polygon)) fail(ErrorKind::internal, at + ": replay differs");
    if (c.y == c.z || sgn(dot(c.z - c.y, c.s_normal)) != 0) fail(ErrorKind::internal, at + ": new corners not parallel to S");
    HedgehogHull h = hedgehog_hull(polygon_hedgehog(s.polygon));
    bool y = false, z = false;
    for (const Rat2& v : h.hull.vertices()) {
      y = y || v == c.y;
      z = z || v == c.z;
    }
    if (!y || !z) fail(ErrorKind::internal, at + ": new corners are not hull vertices");
  }
}

double support_value(const Body& k, double phi) {
  if (const auto* s = std::get_if<SmoothBody>(&k)) return s->support(phi);
  const auto& p = std::get<ConvexPolygon>(k);
  const Vec2d u{std::cos(phi), std::sin(phi)};
  double best = -std::numeric_limits<double>::infinity();
  for (const Rat2& v : p.vertices()) best = std::max(best, dot(to_double(v), u));
  return best;
}

SmoothingAttempt smoothing_attempt(const ConvexPolygon& q, const Body& k, double eps, double radius,
                                   std::size_t samples) {
  SmoothingAttempt a;
  a.radius = radius;
  SmoothBody m = smooth_by_arcs(q, radius);
  a.count = smooth_hull_vertex_count(smooth_hedgehog(m, samples));
  const double diam = diameter(q);
  std::vector<Vec2d> poly;
  for (const Rat2& v : q.vertices()) poly.push_back(to_double(v));
  a.distance = curve_hausdorff_distance(arcgon_boundary(m, 16), poly, 1e-3 * diam);
  constexpr int grid = 8192;
  a.contained = true;
  for (int i = 0; i < grid && a.contained; ++i) {
    const double phi = 2 * std::numbers::pi * i / grid;
    const double hm = m.support(phi);
    const double hk = support_value(k, phi);
    const double slack = 1e-12 * (1 + std::abs(hk));
    a.contained = hm > hk + slack && hm < hk + eps - slack;
  }
  return a;
}

SmoothCertificate finalize_smooth(const ConvexPolygon& q, const Body& k, double eps, std::size_t samples,
                                  int max_doublings) {
  SmoothCertificate cert;
  cert.polygon_count = hull_vertex_count(q);
  double radius = std::max(10 * diameter(q), 2 * minimal_arc_radius(q));
  for (int i = 0; i <= max_doublings; ++i, radius *= 2) {
    SmoothingAttempt a = smoothing_attempt(q, k, eps, radius, samples);
    cert.attempts.push_back(a);
    if (a.contained && a.count == cert.polygon_count) {
      cert.body = smooth_by_arcs(q, radius);
      cert.smooth_count = a.count;
      return cert;
    }
  }
  fail(ErrorKind::radius_schedule_exhausted, "arc radius schedule ended without a matching count");
}

}  // namespace hedgehog
