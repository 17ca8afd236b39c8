#include "hedgehog/svg.hpp"

#include "hedgehog/convexity.hpp"
#include "hedgehog/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hedgehog {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0 ? 0.0 : v);  // no "-0.000000"
  return buf;
}

std::string pt(Vec2d v) { return num(v.x) + "," + num(-v.y); }

class Writer {
 public:
  Writer(double unit, double stroke) : unit_(unit), stroke_(stroke) {}

  void polyline(const std::vector<Vec2d>& pts, bool closed, const std::string& color, double width = 1,
                const std::string& fill = "none") {
    if (pts.empty()) return;
    out_ << "  <" << (closed ? "polygon" : "polyline") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << pt(pts[i]);
    out_ << "\" fill=\"" << fill << "\" stroke=\"" << color << "\" stroke-width=\"" << num(stroke_ * width * unit_)
         << "\"/>\n";
  }

  void line(Vec2d a, Vec2d b, const std::string& color, double width = 1, bool dashed = false) {
    out_ << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(-a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
         << num(-b.y) << "\" stroke=\"" << color << "\" stroke-width=\"" << num(stroke_ * width * unit_) << "\"";
    if (dashed) out_ << " stroke-dasharray=\"" << num(4 * unit_) << "," << num(3 * unit_) << "\"";
    out_ << "/>\n";
  }

  void dot(Vec2d c, double radius_px, const std::string& color, bool filled) {
    out_ << "  <circle cx=\"" << num(c.x) << "\" cy=\"" << num(-c.y) << "\" r=\"" << num(radius_px * unit_)
         << "\" fill=\"" << (filled ? color : "white") << "\" stroke=\"" << color << "\" stroke-width=\""
         << num(stroke_ * unit_) << "\"/>\n";
  }

  void square(Vec2d c, double half_px, const std::string& color) {
    const double h = half_px * unit_;
    out_ << "  <rect x=\"" << num(c.x - h) << "\" y=\"" << num(-c.y - h) << "\" width=\"" << num(2 * h)
         << "\" height=\"" << num(2 * h) << "\" fill=\"" << color << "\"/>\n";
  }

  void text(Vec2d at, const std::string& s) {
    out_ << "  <text x=\"" << num(at.x) << "\" y=\"" << num(-at.y) << "\" font-size=\"" << num(11 * unit_)
         << "\" font-family=\"sans-serif\">" << s << "</text>\n";
  }

  void group(const std::string& id) { out_ << " <g id=\"" << id << "\">\n"; }
  void end_group() { out_ << " </g>\n"; }
  std::string str() const { return out_.str(); }

 private:
  double unit_;
  double stroke_;
  std::ostringstream out_;
};

std::vector<Vec2d> outline(const Body& body) {
  if (const auto* p = std::get_if<ConvexPolygon>(&body)) {
    std::vector<Vec2d> v;
    for (const Rat2& x : p->vertices()) v.push_back(to_double(x));
    return v;
  }
  const auto& k = std::get<SmoothBody>(body);
  return k.kind() == SmoothBody::Kind::arcgon ? arcgon_boundary(k, 24) : k.boundary_samples(720);
}

std::vector<Vec2d> sampled_hull(const std::vector<Vec2d>& pts) {
  std::vector<Rat2> exact;
  for (const Vec2d& v : pts) exact.emplace_back(exact_rational(v.x), exact_rational(v.y));
  std::vector<Vec2d> out;
  for (std::size_t i : convex_hull_indices(exact)) out.push_back(pts[i]);
  return out;
}

}  // namespace

const char* to_string(Layer layer) {
  switch (layer) {
    case Layer::body: return "body";
    case Layer::hedgehog: return "hedgehog";
    case Layer::hull: return "hull";
    case Layer::corners: return "corners";
    case Layer::convexity_points: return "convexity-points";
    case Layer::affine_diameters: return "affine-diameters";
    case Layer::cut_overlay: return "cut-overlay";
  }
  return "?";
}

Layer parse_layer(const std::string& name) {
  for (Layer l : {Layer::body, Layer::hedgehog, Layer::hull, Layer::corners, Layer::convexity_points,
                  Layer::affine_diameters, Layer::cut_overlay})
    if (name == to_string(l)) return l;
  fail(ErrorKind::invalid_argument, "unknown layer '" + name + "'");
}

void RenderSpec::validate() const {
  if (width < 64 || height < 64) fail(ErrorKind::invalid_argument, "figure must be at least 64x64 pixels");
  if (layers.empty()) fail(ErrorKind::invalid_argument, "at least one layer is required");
  if (!(stroke > 0)) fail(ErrorKind::invalid_argument, "stroke width must be positive");
}

std::string render_svg(const Body& body, const RenderSpec& spec, const std::vector<CutConstruction>& cuts) {
  spec.validate();
  const std::vector<Vec2d> boundary = outline(body);
  Vec2d lo = boundary.front(), hi = boundary.front();
  for (const Vec2d& v : boundary) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  double w = hi.x - lo.x, h = hi.y - lo.y;
  const double mx = 0.1 * std::max(w, 1e-9), my = 0.1 * std::max(h, 1e-9);
  const double vx = lo.x - mx, vy = -(hi.y + my), vw = w + 2 * mx, vh = h + 2 * my;
  const double unit = std::max(vw / spec.width, vh / spec.height);
  Writer out(unit, spec.stroke);
  auto has = [&](Layer l) { return spec.layers.count(l) > 0; };

  const auto* poly = std::get_if<ConvexPolygon>(&body);
  std::optional<MiddleHedgehog> m;
  std::optional<HedgehogHull> hull;
  if (poly != nullptr && !has_parallel_edges(*poly)) {
    m = polygon_hedgehog(*poly);
    hull = hedgehog_hull(*m);
  }
  std::vector<Vec2d> smooth_curve;
  if (const auto* k = std::get_if<SmoothBody>(&body)) {
    smooth_curve = k->kind() == SmoothBody::Kind::arcgon ? arcgon_hedgehog_curve(*k) : smooth_hedgehog(*k, 1024).points;
  }

  if (has(Layer::body)) {
    out.group("body");
    out.polyline(boundary, true, "black", 1, "#f4f4f4");
    out.end_group();
  }
  if (has(Layer::affine_diameters) && m) {
    out.group("affine-diameters");
    for (const Corner& c : m->corners) out.line(to_double(poly->vertex(c.p)), to_double(poly->vertex(c.q)), "#999999", 0.5);
    out.end_group();
  }
  if (has(Layer::hull)) {
    out.group("hull");
    if (hull) {
      std::vector<Vec2d> v;
      for (const Rat2& x : hull->hull.vertices()) v.push_back(to_double(x));
      out.polyline(v, true, "#2a7ab0", 1, "#d8e8f4");
    } else if (!smooth_curve.empty()) {
      out.polyline(sampled_hull(smooth_curve), true, "#2a7ab0", 1, "#d8e8f4");
    }
    out.end_group();
  }
  if (has(Layer::hedgehog)) {
    out.group("hedgehog");
    if (m) out.polyline(hedgehog_polyline(*m), true, "#c0392b");
    if (!smooth_curve.empty()) out.polyline(smooth_curve, true, "#c0392b");
    out.end_group();
  }
  if (has(Layer::corners) && m) {
    out.group("corners");
    for (const Corner& c : m->corners) out.dot(to_double(c.location), 3, "#c0392b", c.kind == CornerKind::strong);
    out.end_group();
  }
  if (has(Layer::convexity_points) && poly != nullptr) {
    out.group("convexity-points");
    if (auto c = central_symmetry_center(*poly)) {
      out.square(to_double(*c), 3, "#27ae60");
    } else if (m) {
      for (const Candidate& c : candidate_convexity_points(*poly)) out.square(to_double(c.point), 3, "#27ae60");
    }
    out.end_group();
  }
  if (has(Layer::cut_overlay) && !cuts.empty()) {
    out.group("cut-overlay");
    for (const CutConstruction& c : cuts) {
      const Vec2d a1 = to_double(c.p + c.lambda * c.t1), a2 = to_double(c.p + c.lambda * c.t2);
      const Vec2d b1 = to_double(c.q + c.lambda * c.s1), b2 = to_double(c.q + c.lambda * c.s2);
      out.line(a1, a2, "#8e44ad");
      out.line(b1, b2, "#8e44ad");
      const Vec2d y = to_double(c.y), z = to_double(c.z);
      const Vec2d d = z - y;
      const double len = norm(d);
      if (len > 0) {
        const Vec2d e = (0.05 * std::max(vw, vh) / len) * d;
        out.line(y - e, z + e, "#8e44ad", 0.7, true);
      }
      out.dot(y, 2, "#8e44ad", true);
      out.dot(z, 2, "#8e44ad", true);
    }
    out.end_group();
  }
  if (spec.labels && m) {
    out.group("labels");
    for (std::size_t i = 0; i < m->corners.size(); ++i) out.text(to_double(m->corners[i].location), std::to_string(i));
    out.end_group();
  }

  std::ostringstream doc;
  doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"" << num(vx) << " " << num(vy) << " " << num(vw) << " " << num(vh) << "\">\n"
      << out.str() << "</svg>\n";
  return doc.str();
}

}  // namespace hedgehog
