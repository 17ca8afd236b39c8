#include "hedgehog/kernel.hpp"

#include "hedgehog/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace hedgehog {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::parallel_edges: return "parallel edges";
    case ErrorKind::long_edge: return "long edge";
    case ErrorKind::centrally_symmetric: return "centrally symmetric";
    case ErrorKind::radius_too_small: return "radius too small";
    case ErrorKind::approximation_failure: return "approximation failure";
    case ErrorKind::search_exhausted: return "search exhausted";
    case ErrorKind::invariant_regression: return "invariant regression";
    case ErrorKind::radius_schedule_exhausted: return "radius schedule exhausted";
    case ErrorKind::internal: return "internal invariant violated";
  }
  return "unknown";
}

int sign(const Rational& v) { return sgn(v); }

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text = raw;
  text.erase(std::remove_if(text.begin(), text.end(),
                            [](unsigned char c) { return std::isspace(c) != 0; }),
             text.end());
  if (text.empty()) fail(ErrorKind::parse, "empty rational");

  bool negative = false;
  std::string body = text;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body.erase(0, 1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(ErrorKind::parse, "malformed rational '" + raw + "'");
    mpz_class d(den);
    if (d == 0) fail(ErrorKind::parse, "zero denominator in '" + raw + "'");
    result = Rational(mpz_class(num), d);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
      std::string exp_text = body.substr(e + 1);
      body = body.substr(0, e);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
        exp_negative = exp_text[0] == '-';
        exp_text.erase(0, 1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6)
        fail(ErrorKind::parse, "malformed exponent in '" + raw + "'");
      exponent = std::stol(exp_text) * (exp_negative ? -1 : 1);
    }
    std::string int_part = body;
    std::string frac_part;
    if (auto dot_pos = body.find('.'); dot_pos != std::string::npos) {
      int_part = body.substr(0, dot_pos);
      frac_part = body.substr(dot_pos + 1);
    }
    if (int_part.empty() && frac_part.empty())
      fail(ErrorKind::parse, "malformed number '" + raw + "'");
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      fail(ErrorKind::parse, "malformed number '" + raw + "'");
    mpz_class digits(int_part.empty() ? std::string("0") + frac_part : int_part + frac_part);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    if (scale >= 0) {
      result = Rational(digits, pow10(scale));
    } else {
      result = Rational(digits * pow10(-scale), 1);
    }
    result.canonicalize();
  }
  return negative ? Rational(-result) : result;
}

Rational exact_rational(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::invalid_argument, "non-finite coordinate");
  return Rational(v);  // mpq_set_d is exact
}

Rational dyadic(double v, int bits, int round) {
  if (!std::isfinite(v)) fail(ErrorKind::invalid_argument, "non-finite value");
  double scaled = std::ldexp(v, bits);
  double k = round < 0 ? std::floor(scaled) : round > 0 ? std::ceil(scaled) : std::nearbyint(scaled);
  Rational r(k);
  if (bits >= 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  } else {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-bits));
  }
  return r;
}

bool lex_less(const Rat2& a, const Rat2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

int orient(const Rat2& a, const Rat2& b, const Rat2& c) {
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(v);
}

Rational squared_distance_to_segment(const Rat2& x, const Rat2& a, const Rat2& b) {
  Rat2 d = b - a;
  Rat2 w = x - a;
  Rational len2 = dot(d, d);
  if (len2 == 0) return dot(w, w);
  Rational t = dot(w, d);
  if (t <= 0) return dot(w, w);
  if (t >= len2) {
    Rat2 v = x - b;
    return dot(v, v);
  }
  // |w|^2 - (w.d)^2/|d|^2
  Rational c = cross(d, w);
  return c * c / len2;
}

// -- HullPolygon ---------------------------------------------------------------

HullPolygon::HullPolygon(std::vector<Rat2> vertices) : vertices_(std::move(vertices)) {
  switch (vertices_.size()) {
    case 0: kind_ = HullKind::empty; break;
    case 1: kind_ = HullKind::point; break;
    case 2: kind_ = HullKind::segment; break;
    default: kind_ = HullKind::polygon; break;
  }
}

bool HullPolygon::contains(const Rat2& x) const {
  switch (kind_) {
    case HullKind::empty: return false;
    case HullKind::point: return vertices_[0] == x;
    case HullKind::segment:
      return orient(vertices_[0], vertices_[1], x) == 0 &&
             dot(x - vertices_[0], x - vertices_[1]) <= 0;
    case HullKind::polygon: break;
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(vertices_[i], vertices_[(i + 1) % n], x) < 0) return false;
  }
  return true;
}

bool HullPolygon::contains_strictly(const Rat2& x) const {
  if (kind_ != HullKind::polygon) return false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(vertices_[i], vertices_[(i + 1) % n], x) <= 0) return false;
  }
  return true;
}

bool operator==(const HullPolygon& a, const HullPolygon& b) {
  if (a.kind_ != b.kind_ || a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (!(b.vertices_[shift] == a.vertices_[0])) continue;
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) {
      same = a.vertices_[i] == b.vertices_[(i + shift) % n];
    }
    if (same) return true;
    if (n == 2) {
      // a segment has no orientation
      return a.vertices_[0] == b.vertices_[1] && a.vertices_[1] == b.vertices_[0];
    }
  }
  return false;
}

// -- hull ------------------------------------------------------------------------

std::vector<std::size_t> convex_hull_indices(std::span<const Rat2> points) {
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(points[a], points[b]);
  });
  // drop duplicates, keeping the first occurrence
  std::vector<std::size_t> uniq;
  for (std::size_t idx : order) {
    if (uniq.empty() || !(points[uniq.back()] == points[idx])) uniq.push_back(idx);
  }
  if (uniq.size() <= 1) return uniq;

  // Andrew's monotone chain; popping on orient <= 0 removes collinear points.
  std::vector<std::size_t> hull(2 * uniq.size());
  std::size_t k = 0;
  for (std::size_t idx : uniq) {
    while (k >= 2 && orient(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = uniq.size() - 1; i-- > 0;) {
    std::size_t idx = uniq[i];
    while (k >= lower && orient(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && points[hull[0]] == points[hull[1]]) hull.resize(1);
  return hull;
}

HullPolygon convex_hull(std::span<const Rat2> points) {
  std::vector<Rat2> out;
  for (std::size_t i : convex_hull_indices(points)) out.push_back(points[i]);
  return HullPolygon(std::move(out));
}

// -- clipping ----------------------------------------------------------------------

namespace {

// Keeps the part of a convex point list (closed cycle) with orient(a, b, x) >= 0.
std::vector<Rat2> clip_halfplane(const std::vector<Rat2>& poly, const Rat2& a, const Rat2& b) {
  std::vector<Rat2> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  if (n == 1) {
    if (orient(a, b, poly[0]) >= 0) out.push_back(poly[0]);
    return out;
  }
  const Rat2 d = b - a;
  const std::size_t edges = n == 2 ? 1 : n;  // a segment is one edge, not a cycle
  for (std::size_t i = 0; i < edges; ++i) {
    const Rat2& cur = poly[i];
    const Rat2& nxt = poly[(i + 1) % n];
    Rational sc = cross(d, cur - a);
    Rational sn = cross(d, nxt - a);
    if (sgn(sc) >= 0) out.push_back(cur);
    if ((sgn(sc) > 0 && sgn(sn) < 0) || (sgn(sc) < 0 && sgn(sn) > 0)) {
      Rational t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
    if (n == 2 && sgn(sn) >= 0) out.push_back(nxt);
  }
  return out;
}

}  // namespace

HullPolygon clip_convex(const HullPolygon& p, const HullPolygon& q) {
  if (p.empty() || q.empty()) return {};
  const HullPolygon* subject = &p;
  const HullPolygon* clipper = &q;
  if (clipper->degenerate() && !subject->degenerate()) std::swap(subject, clipper);

  if (!clipper->degenerate()) {
    std::vector<Rat2> poly = subject->vertices();
    const std::size_t m = clipper->size();
    for (std::size_t i = 0; i < m && !poly.empty(); ++i) {
      poly = clip_halfplane(poly, (*clipper)[i], (*clipper)[(i + 1) % m]);
    }
    return convex_hull(poly);
  }

  // both degenerate: points and segments
  std::vector<Rat2> out;
  for (const Rat2& v : subject->vertices())
    if (clipper->contains(v)) out.push_back(v);
  for (const Rat2& v : clipper->vertices())
    if (subject->contains(v)) out.push_back(v);
  if (out.empty() && subject->kind() == HullKind::segment && clipper->kind() == HullKind::segment) {
    // proper crossing of two segments
    const Rat2& a = (*subject)[0];
    const Rat2& b = (*subject)[1];
    const Rat2& c = (*clipper)[0];
    const Rat2& d = (*clipper)[1];
    if (orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0) {
      Rational t = cross(c - a, d - c) / cross(b - a, d - c);
      out.push_back(a + t * (b - a));
    }
  }
  return convex_hull(out);
}

Rational signed_area2(std::span<const Rat2> cycle) {
  Rational s = 0;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(cycle[i], cycle[(i + 1) % n]);
  return s;
}

Rational area(const HullPolygon& p) {
  if (p.degenerate()) return 0;
  Rational a = signed_area2(p.vertices()) / 2;
  return abs(a);
}

// -- floating point ------------------------------------------------------------------

Vec2d to_double(const Rat2& p) { return {p.x.get_d(), p.y.get_d()}; }

double norm(Vec2d v) { return std::hypot(v.x, v.y); }

double distance_to_segment(Vec2d x, Vec2d a, Vec2d b) {
  Vec2d d = b - a;
  Vec2d w = x - a;
  double len2 = dot(d, d);
  if (len2 == 0) return norm(w);
  double t = std::clamp(dot(w, d) / len2, 0.0, 1.0);
  return norm(w - t * d);
}

double hausdorff_distance(std::span<const Vec2d> a, std::span<const Vec2d> b) {
  if (a.empty() || b.empty()) fail(ErrorKind::invalid_argument, "hausdorff_distance of an empty sample");
  auto directed = [](std::span<const Vec2d> from, std::span<const Vec2d> to) {
    double worst = 0;
    for (Vec2d x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (Vec2d y : to) {
        best = std::min(best, (x.x - y.x) * (x.x - y.x) + (x.y - y.y) * (x.y - y.y));
        if (best <= worst) break;
      }
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

namespace {

std::vector<Vec2d> densify(std::span<const Vec2d> curve, double step, bool closed) {
  std::vector<Vec2d> out;
  const std::size_t n = curve.size();
  const std::size_t segments = closed ? n : n - 1;
  for (std::size_t i = 0; i < segments; ++i) {
    Vec2d a = curve[i];
    Vec2d b = curve[(i + 1) % n];
    auto pieces = static_cast<std::size_t>(std::ceil(norm(b - a) / step));
    pieces = std::max<std::size_t>(pieces, 1);
    for (std::size_t k = 0; k < pieces; ++k) {
      double t = static_cast<double>(k) / static_cast<double>(pieces);
      out.push_back(a + t * (b - a));
    }
  }
  if (!closed) out.push_back(curve[n - 1]);
  return out;
}

double directed_to_polyline(std::span<const Vec2d> from, std::span<const Vec2d> curve, bool closed) {
  const std::size_t n = curve.size();
  double worst = 0;
  for (Vec2d x : from) {
    double best = std::numeric_limits<double>::infinity();
    if (n == 1) best = norm(x - curve[0]);
    const std::size_t segments = n == 1 ? 0 : (closed ? n : n - 1);
    for (std::size_t i = 0; i < segments && best > worst; ++i) {
      best = std::min(best, distance_to_segment(x, curve[i], curve[(i + 1) % n]));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double curve_hausdorff_distance(std::span<const Vec2d> a, std::span<const Vec2d> b, double step,
                                bool closed) {
  if (a.empty() || b.empty()) fail(ErrorKind::invalid_argument, "curve_hausdorff_distance of an empty curve");
  if (!(step > 0)) fail(ErrorKind::invalid_argument, "sampling step must be positive");
  std::vector<Vec2d> da = a.size() == 1 ? std::vector<Vec2d>(a.begin(), a.end()) : densify(a, step, closed);
  std::vector<Vec2d> db = b.size() == 1 ? std::vector<Vec2d>(b.begin(), b.end()) : densify(b, step, closed);
  return std::max(directed_to_polyline(da, b, closed), directed_to_polyline(db, a, closed));
}

std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace hedgehog
