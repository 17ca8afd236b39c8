#include "hedgehog/convexity.hpp"
#include "hedgehog/error.hpp"
#include "hedgehog/io.hpp"
#include "hedgehog/perturb.hpp"
#include "hedgehog/svg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace hedgehog;

namespace {

enum Exit { ok = 0, usage = 2, precondition = 3, trap = 4 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::parse:
      return usage;
    case ErrorKind::parallel_edges:
    case ErrorKind::long_edge:
    case ErrorKind::centrally_symmetric:
    case ErrorKind::radius_too_small:
      return precondition;
    default:
      return trap;
  }
}

std::string show(const Rat2& v) { return "(" + to_string(v.x) + ", " + to_string(v.y) + ")"; }

std::string show(Vec2d v) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "(%.12g, %.12g)", v.x, v.y);
  return buf;
}

const ConvexPolygon& need_polygon(const Body& b, const char* command) {
  const auto* p = std::get_if<ConvexPolygon>(&b);
  if (p == nullptr) fail(ErrorKind::invalid_argument, std::string(command) + " needs a polygon body");
  return *p;
}

void maybe_svg(const std::string& path, const Body& body, RenderSpec spec, const std::vector<CutConstruction>& cuts = {}) {
  if (path.empty()) return;
  write_text_file(path, render_svg(body, spec, cuts));
}

struct Shared {
  std::string input;
  std::string svg;
  bool json = false;
};

int run_hedgehog(const Shared& o, std::size_t samples) {
  Body body = read_body_file(o.input);
  if (const auto* p = std::get_if<ConvexPolygon>(&body)) {
    MiddleHedgehog m = polygon_hedgehog(*p);
    HedgehogHull h = hedgehog_hull(m);
    if (o.json) {
      std::cout << to_json(m, h).dump(2) << "\n";
    } else {
      std::cout << "middle sets:\n";
      for (std::size_t i = 0; i < m.sets.size(); ++i) {
        const MiddleSet& s = m.sets[i];
        std::cout << "  " << i << ": u = " << show(s.direction) << "  " << show(s.geometry.a) << " -- "
                  << show(s.geometry.b) << "\n";
      }
      std::cout << "corners:\n";
      for (std::size_t i = 0; i < m.corners.size(); ++i) {
        const Corner& c = m.corners[i];
        bool on_hull = false;
        for (const Rat2& v : h.hull.vertices()) on_hull = on_hull || v == c.location;
        std::cout << "  " << i << ": " << show(c.location) << " " << to_string(c.kind) << (on_hull ? " hull" : "")
                  << "\n";
      }
      std::cout << "corners: " << m.corners.size() << " (weak " << m.weak_count() << ", strong " << m.strong_count()
                << "); hull vertices: " << h.vertex_count() << "\n";
    }
  } else {
    const auto& k = std::get<SmoothBody>(body);
    SampledHedgehog m = smooth_hedgehog(k, samples);
    std::vector<Vec2d> hull = smooth_hull_vertices(m);
    if (o.json) {
      Json pts = Json::array();
      for (const Vec2d& v : hull) pts.push_back({v.x, v.y});
      std::cout << Json{{"samples", samples}, {"hull", pts}, {"hull_vertices", hull.size()}}.dump(2) << "\n";
    } else {
      for (const Vec2d& v : hull) std::cout << "  hull vertex " << show(v) << "\n";
      std::cout << "samples: " << samples << "; hull vertices: " << hull.size() << " (clustered)\n";
    }
  }
  maybe_svg(o.svg, body, {});
  return ok;
}

int run_convexity(const Shared& o, std::size_t oracle) {
  Body body = read_body_file(o.input);
  RenderSpec spec;
  spec.layers = {Layer::body, Layer::hedgehog, Layer::hull, Layer::convexity_points};
  if (const auto* k = std::get_if<SmoothBody>(&body)) {
    Json j;
    if (auto c = central_symmetry_center(*k)) {
      j = {{"symmetric", true}, {"center", {c->x, c->y}}};
      if (!o.json) std::cout << "centrally symmetric; convexity point: center " << show(*c) << "\n";
    } else {
      Json cands = Json::array();
      if (!o.json) std::cout << "candidates (sampled hedgehog, tolerance mode):\n";
      for (const Vec2d& v : smooth_hull_vertices(smooth_hedgehog(*k, 4096))) {
        const bool verdict = is_convexity_point(*k, v);
        cands.push_back({{"point", {v.x, v.y}}, {"verified", verdict}});
        if (!o.json) std::cout << "  " << show(v) << (verdict ? " verified" : " rejected") << "\n";
      }
      j = {{"symmetric", false}, {"candidates", cands}};
    }
    if (o.json) std::cout << j.dump(2) << "\n";
    maybe_svg(o.svg, body, spec);
    return ok;
  }

  const ConvexPolygon& p = std::get<ConvexPolygon>(body);
  ConvexityReport r = verify_theorem1(p, oracle);
  std::vector<Rat2> hits;
  if (oracle > 0 && !r.symmetric) hits = brute_force_convexity_points(p, oracle);
  if (o.json) {
    Json j = to_json(r);
    if (oracle > 0 && !r.symmetric) {
      Json h = Json::array();
      for (const Rat2& v : hits) h.push_back(to_json(v));
      j["oracle"] = {{"grid", oracle}, {"hits", h}};
    }
    std::cout << j.dump(2) << "\n";
  } else if (r.symmetric) {
    std::cout << "centrally symmetric; convexity point: center " << show(*r.center) << "\n";
  } else {
    std::cout << "candidates:" << (r.from_oracle ? " (oracle grid)" : "") << "\n";
    for (const Candidate& c : r.candidates)
      std::cout << "  " << show(c.point) << (c.verified ? " verified" : " rejected") << "\n";
    std::cout << "verified: " << r.verified.size() << "\n";
    if (r.triple) {
      std::cout << "affinely independent triple: " << show((*r.triple)[0]) << ", " << show((*r.triple)[1]) << ", "
                << show((*r.triple)[2]) << "\n";
    } else {
      std::cout << "no affinely independent triple found\n";
    }
    if (oracle > 0) {
      // A candidate that happens to be a grid point must be an oracle hit.
      std::size_t on_grid = 0, confirmed = 0;
      Rational step_x, step_y;
      {
        Rational lo_x = p.vertex(0).x, hi_x = lo_x, lo_y = p.vertex(0).y, hi_y = lo_y;
        for (const Rat2& v : p.vertices()) {
          if (v.x < lo_x) lo_x = v.x;
          if (v.x > hi_x) hi_x = v.x;
          if (v.y < lo_y) lo_y = v.y;
          if (v.y > hi_y) hi_y = v.y;
        }
        step_x = (hi_x - lo_x) / static_cast<long>(oracle);
        step_y = (hi_y - lo_y) / static_cast<long>(oracle);
        for (const Candidate& c : r.candidates) {
          Rational gx = (c.point.x - lo_x) / step_x, gy = (c.point.y - lo_y) / step_y;
          if (gx.get_den() != 1 || gy.get_den() != 1) continue;
          ++on_grid;
          for (const Rat2& h : hits) confirmed += h == c.point ? 1 : 0;
        }
      }
      std::size_t near = 0;
      for (const Rat2& h : hits) {
        for (const Candidate& c : r.candidates) {
          Rat2 d = h - c.point;
          if (abs(d.x) <= step_x && abs(d.y) <= step_y) {
            ++near;
            break;
          }
        }
      }
      std::cout << "oracle grid " << oracle << ": " << hits.size() << " hits, " << near
                << " within one cell of a candidate; grid candidates confirmed " << confirmed << "/" << on_grid
                << "\n";
    }
  }
  maybe_svg(o.svg, body, spec);
  return ok;
}

struct PerturbOptions {
  double eps = 0;
  std::size_t target = 0;
  std::uint64_t seed = 1;
  bool smooth = false;
  std::string trace;
  std::string out;
  std::string smooth_out;
};

int run_perturb(const Shared& o, const PerturbOptions& po) {
  Body body = read_body_file(o.input);
  PerturbationTrace trace = increase_hull_vertices(body, po.eps, po.target, po.seed);
  check_trace(trace, body);
  const ConvexPolygon& q = trace.steps.back().polygon;
  std::optional<SmoothCertificate> cert;
  if (po.smooth) cert = finalize_smooth(q, body, po.eps);

  if (!po.trace.empty()) write_text_file(po.trace, to_json(trace).dump(1) + "\n");
  if (!po.out.empty()) write_text_file(po.out, to_json(q).dump(1) + "\n");
  if (!po.smooth_out.empty()) {
    if (!cert) fail(ErrorKind::invalid_argument, "--smooth-out needs --smooth");
    write_text_file(po.smooth_out, to_json(cert->body).dump(1) + "\n");
  }

  const std::size_t cuts = trace.steps.size() - 1;
  if (o.json) {
    Json counts = Json::array();
    for (const TraceStep& s : trace.steps) counts.push_back(s.count);
    Json j = {{"eps", po.eps}, {"target", po.target}, {"seed", po.seed}, {"counts", counts}, {"cuts", cuts},
              {"final", to_json(q)}};
    if (cert) j["smooth"] = to_json(*cert);
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const TraceStep& s = trace.steps[i];
      std::cout << "step " << i << ": " << s.polygon.size() << " vertices, hull vertices " << s.count
                << (i == 0 ? " (sandwich polygon)" : "") << "\n";
    }
    std::cout << "final count: " << trace.steps.back().count << " > " << po.target << " after " << cuts << " cuts\n";
    if (cert) {
      for (const SmoothingAttempt& a : cert->attempts) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "  R = %.6g: count %zu, distance %.3e, contained %s", a.radius, a.count,
                      a.distance, a.contained ? "yes" : "no");
        std::cout << buf << "\n";
      }
      std::cout << "smooth count: " << cert->smooth_count << " (polygon " << cert->polygon_count << ")\n";
    }
  }
  if (!o.svg.empty()) {
    RenderSpec spec;
    spec.layers = {Layer::body, Layer::hedgehog, Layer::hull, Layer::corners, Layer::cut_overlay};
    std::vector<CutConstruction> last;
    if (trace.steps.back().cut) last.push_back(*trace.steps.back().cut);
    maybe_svg(o.svg, Body(q), spec, last);
  }
  return ok;
}

int run_render(const Shared& o, RenderSpec spec, const std::string& layers, const std::string& trace_path) {
  if (o.svg.empty()) fail(ErrorKind::invalid_argument, "render needs --svg PATH");
  if (!layers.empty()) {
    spec.layers.clear();
    std::stringstream in(layers);
    for (std::string name; std::getline(in, name, ',');)
      if (!name.empty()) spec.layers.insert(parse_layer(name));
  }
  Body body = read_body_file(o.input);
  std::vector<CutConstruction> cuts;
  if (!trace_path.empty()) {
    for (const TraceStep& s : trace_from_json(read_json_file(trace_path)).steps)
      if (s.cut) cuts.push_back(*s.cut);
  }
  maybe_svg(o.svg, body, spec, cuts);
  return ok;
}

int run_oracle(const Shared& o, std::size_t grid) {
  Body body = read_body_file(o.input);
  const ConvexPolygon& p = need_polygon(body, "oracle");
  std::vector<Rat2> hits = brute_force_convexity_points(p, grid);
  if (o.json) {
    Json h = Json::array();
    for (const Rat2& v : hits) h.push_back(to_json(v));
    std::cout << Json{{"grid", grid}, {"hits", h}}.dump(2) << "\n";
  } else {
    for (const Rat2& v : hits) std::cout << "  " << show(v) << "\n";
    std::cout << "grid " << grid << ": " << hits.size() << " convexity points\n";
  }
  return ok;
}

int run_replay(const Shared& o, const std::string& trace_path) {
  Body body = read_body_file(o.input);
  PerturbationTrace trace = trace_from_json(read_json_file(trace_path));
  check_trace(trace, body);
  std::cout << "trace ok: " << trace.steps.size() << " steps, final count " << trace.steps.back().count << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Middle hedgehogs, convexity points and hull-vertex perturbations of planar convex bodies"};
  app.require_subcommand(1);
  Shared shared;
  auto add_shared = [&](CLI::App* c, bool svg = true) {
    c->add_option("body", shared.input, "Body file (JSON)")->required()->check(CLI::ExistingFile);
    if (svg) c->add_option("--svg", shared.svg, "Write an SVG figure");
    c->add_flag("--json", shared.json, "Machine-readable report");
  };

  std::size_t samples = 4096;
  auto* hedgehog_cmd = app.add_subcommand("hedgehog", "Middle sets, corners and hull of the middle hedgehog");
  add_shared(hedgehog_cmd);
  hedgehog_cmd->add_option("--samples", samples, "Angle samples for smooth bodies")->check(CLI::Range(8, 1 << 22));

  std::size_t oracle = 0;
  auto* convexity_cmd = app.add_subcommand("convexity", "Candidate convexity points and an affinely independent triple");
  add_shared(convexity_cmd);
  convexity_cmd->add_option("--oracle", oracle, "Cross-check on an N x N brute-force grid")->check(CLI::Range(16, 4096));

  PerturbOptions po;
  auto* perturb_cmd = app.add_subcommand("perturb", "Cut vertices until the hull vertex count exceeds a target");
  add_shared(perturb_cmd);
  perturb_cmd->add_option("--eps", po.eps, "Neighborhood radius")->required()->check(CLI::PositiveNumber);
  perturb_cmd->add_option("--target", po.target, "Count to exceed")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  perturb_cmd->add_option("--seed", po.seed, "Seed of the sandwich polygon");
  perturb_cmd->add_flag("--smooth", po.smooth, "Smooth the final polygon by circular arcs");
  perturb_cmd->add_option("--trace", po.trace, "Write the trace");
  perturb_cmd->add_option("--out", po.out, "Write the final polygon");
  perturb_cmd->add_option("--smooth-out", po.smooth_out, "Write the smoothed body");

  RenderSpec spec;
  std::string layers, trace_path;
  auto* render_cmd = app.add_subcommand("render", "Draw a body with chosen layers");
  add_shared(render_cmd);
  render_cmd->add_option("--layers", layers,
                         "Comma list of body, hedgehog, hull, corners, convexity-points, affine-diameters, cut-overlay");
  render_cmd->add_option("--width", spec.width, "Pixels");
  render_cmd->add_option("--height", spec.height, "Pixels");
  render_cmd->add_option("--stroke", spec.stroke, "Stroke width in pixels");
  render_cmd->add_flag("--labels", spec.labels, "Number the corners");
  render_cmd->add_option("--trace", trace_path, "Overlay the cuts of a trace file")->check(CLI::ExistingFile);

  std::size_t grid = 64;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force convexity points on a grid");
  add_shared(oracle_cmd, false);
  oracle_cmd->add_option("--grid", grid, "Grid resolution")->check(CLI::Range(16, 4096));

  auto* replay_cmd = app.add_subcommand("replay", "Re-verify a trace against its body");
  add_shared(replay_cmd, false);
  replay_cmd->add_option("trace", trace_path, "Trace file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*hedgehog_cmd) return run_hedgehog(shared, samples);
    if (*convexity_cmd) return run_convexity(shared, oracle);
    if (*perturb_cmd) return run_perturb(shared, po);
    if (*render_cmd) return run_render(shared, spec, layers, trace_path);
    if (*oracle_cmd) return run_oracle(shared, grid);
    if (*replay_cmd) return run_replay(shared, trace_path);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return trap;
  }
  return usage;
}
