#include "hedgehog/io.hpp"

#include "hedgehog/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hedgehog {

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) fail(ErrorKind::parse, std::string(what) + " must be a number");
  return j.get<double>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

Vec2d vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::parse, "a point is a two-element array");
  return {number(j[0], "coordinate"), number(j[1], "coordinate")};
}

std::size_t index(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) fail(ErrorKind::parse, std::string(key) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    double v = j.get<double>();
    if (!std::isfinite(v)) fail(ErrorKind::parse, "non-finite number");
    return exact_rational(v);
  }
  fail(ErrorKind::parse, "expected a rational");
}

Json to_json(const Rational& v) { return to_string(v); }

Rat2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::parse, "a point is a two-element array");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json to_json(const Rat2& v) { return Json::array({to_json(v.x), to_json(v.y)}); }

Body body_from_json(const Json& j) {
  const std::string type = field(j, "type").is_string() ? j.at("type").get<std::string>() : "";
  try {
    if (type == "polygon") {
      const Json& vs = field(j, "vertices");
      if (!vs.is_array()) fail(ErrorKind::parse, "vertices must be an array");
      std::vector<Rat2> pts;
      for (const Json& v : vs) pts.push_back(point_from_json(v));
      return ConvexPolygon(std::move(pts));
    }
    if (type == "arcgon") {
      std::vector<Arc> arcs;
      for (const Json& a : field(j, "arcs")) {
        arcs.push_back({vec_from_json(field(a, "center")), number(field(a, "radius"), "radius"),
                        number(field(a, "from"), "from"), number(field(a, "to"), "to")});
      }
      return SmoothBody::arcgon(std::move(arcs));
    }
    if (type == "fourier") {
      std::vector<FourierTerm> terms;
      if (j.contains("terms")) {
        for (const Json& t : j.at("terms")) {
          if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
            fail(ErrorKind::parse, "a fourier term is [j, a_j, b_j]");
          terms.push_back({t[0].get<int>(), number(t[1], "a_j"), number(t[2], "b_j")});
        }
      }
      return SmoothBody::fourier(number(field(j, "a0"), "a0"), std::move(terms));
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::parse, e.what());
  }
  fail(ErrorKind::parse, "unknown body type '" + type + "'");
}

Json to_json(const ConvexPolygon& p) {
  Json vs = Json::array();
  for (const Rat2& v : p.vertices()) vs.push_back(to_json(v));
  return {{"type", "polygon"}, {"vertices", vs}};
}

Json to_json(const SmoothBody& k) {
  if (k.kind() == SmoothBody::Kind::arcgon) {
    Json arcs = Json::array();
    for (const Arc& a : k.arcs())
      arcs.push_back({{"center", {a.center.x, a.center.y}}, {"radius", a.radius}, {"from", a.from}, {"to", a.to}});
    return {{"type", "arcgon"}, {"arcs", arcs}};
  }
  Json terms = Json::array();
  for (const FourierTerm& t : k.terms()) terms.push_back({t.order, t.a, t.b});
  return {{"type", "fourier"}, {"a0", k.a0()}, {"terms", terms}};
}

Json to_json(const Body& b) {
  return std::visit([](const auto& x) { return to_json(x); }, b);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorKind::parse, path + ": " + e.what());
  }
}

Body read_body_file(const std::string& path) { return body_from_json(read_json_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::invalid_argument, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorKind::invalid_argument, "write failed: " + path);
}

Json to_json(const MiddleHedgehog& m, const HedgehogHull& h) {
  Json sets = Json::array();
  for (const MiddleSet& s : m.sets) {
    sets.push_back({{"direction", to_json(s.direction)},
                    {"a", to_json(s.geometry.a)},
                    {"b", to_json(s.geometry.b)}});
  }
  Json corners = Json::array();
  for (const Corner& c : m.corners) {
    corners.push_back({{"location", to_json(c.location)},
                       {"kind", to_string(c.kind)},
                       {"p", c.p},
                       {"q", c.q},
                       {"between", c.between}});
  }
  Json hull = Json::array();
  for (const Rat2& v : h.hull.vertices()) hull.push_back(to_json(v));
  return {{"middle_sets", sets},
          {"corners", corners},
          {"weak", m.weak_count()},
          {"strong", m.strong_count()},
          {"hull", hull},
          {"hull_vertices", h.vertex_count()}};
}

Json to_json(const ConvexityReport& r) {
  Json j;
  j["symmetric"] = r.symmetric;
  if (r.center) j["center"] = to_json(*r.center);
  j["from_oracle"] = r.from_oracle;
  Json cands = Json::array();
  for (const Candidate& c : r.candidates) cands.push_back({{"point", to_json(c.point)}, {"verified", c.verified}});
  j["candidates"] = cands;
  if (r.triple) {
    Json t = Json::array();
    for (const Rat2& v : *r.triple) t.push_back(to_json(v));
    j["triple"] = t;
  } else {
    j["triple"] = nullptr;
  }
  return j;
}

Json to_json(const CutConstruction& c) {
  return {{"x", to_json(c.x)},         {"p_index", c.p_index}, {"q_index", c.q_index}, {"p", to_json(c.p)},
          {"q", to_json(c.q)},         {"edge_p", c.edge_p},   {"edge_q", c.edge_q},   {"edge_j", c.edge_j},
          {"edge_m", c.edge_m},        {"s_normal", to_json(c.s_normal)},              {"tau", to_json(c.tau)},
          {"sigma", to_json(c.sigma)}, {"lambda", to_json(c.lambda)},                  {"s", to_json(c.s)},
          {"s1", to_json(c.s1)},       {"s2", to_json(c.s2)},  {"t", to_json(c.t)},    {"t1", to_json(c.t1)},
          {"t2", to_json(c.t2)},       {"y", to_json(c.y)},    {"z", to_json(c.z)}};
}

CutConstruction cut_from_json(const Json& j) {
  CutConstruction c;
  try {
    c.x = point_from_json(field(j, "x"));
    c.p_index = index(j, "p_index");
    c.q_index = index(j, "q_index");
    c.p = point_from_json(field(j, "p"));
    c.q = point_from_json(field(j, "q"));
    c.edge_p = index(j, "edge_p");
    c.edge_q = index(j, "edge_q");
    c.edge_j = index(j, "edge_j");
    c.edge_m = index(j, "edge_m");
    c.s_normal = point_from_json(field(j, "s_normal"));
    c.tau = rational_from_json(field(j, "tau"));
    c.sigma = rational_from_json(field(j, "sigma"));
    c.lambda = rational_from_json(field(j, "lambda"));
    c.s = point_from_json(field(j, "s"));
    c.s1 = point_from_json(field(j, "s1"));
    c.s2 = point_from_json(field(j, "s2"));
    c.t = point_from_json(field(j, "t"));
    c.t1 = point_from_json(field(j, "t1"));
    c.t2 = point_from_json(field(j, "t2"));
    c.y = point_from_json(field(j, "y"));
    c.z = point_from_json(field(j, "z"));
  } catch (const Json::exception& e) {
    fail(ErrorKind::parse, e.what());
  }
  return c;
}

Json to_json(const PerturbationTrace& t) {
  Json steps = Json::array();
  for (const TraceStep& s : t.steps) {
    Json step = {{"polygon", to_json(s.polygon)},
                 {"count", s.count},
                 {"contains_body", s.contains_body},
                 {"inside_neighborhood", s.inside_neighborhood}};
    step["cut"] = s.cut ? to_json(*s.cut) : Json(nullptr);
    steps.push_back(std::move(step));
  }
  return {{"eps", t.eps}, {"target", t.target}, {"seed", t.seed}, {"steps", steps}};
}

PerturbationTrace trace_from_json(const Json& j) {
  PerturbationTrace t;
  try {
    t.eps = number(field(j, "eps"), "eps");
    t.target = index(j, "target");
    t.seed = field(j, "seed").get<std::uint64_t>();
    for (const Json& s : field(j, "steps")) {
      Body b = body_from_json(field(s, "polygon"));
      if (!std::holds_alternative<ConvexPolygon>(b)) fail(ErrorKind::parse, "trace steps hold polygons");
      TraceStep step{std::get<ConvexPolygon>(b), index(s, "count"), std::nullopt,
                     field(s, "contains_body").get<bool>(), field(s, "inside_neighborhood").get<bool>()};
      if (!field(s, "cut").is_null()) step.cut = cut_from_json(s.at("cut"));
      t.steps.push_back(std::move(step));
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::parse, e.what());
  }
  return t;
}

Json to_json(const SmoothCertificate& c) {
  Json attempts = Json::array();
  for (const SmoothingAttempt& a : c.attempts)
    attempts.push_back({{"radius", a.radius}, {"count", a.count}, {"distance", a.distance}, {"contained", a.contained}});
  return {{"polygon_count", c.polygon_count}, {"smooth_count", c.smooth_count}, {"attempts", attempts}};
}

}  // namespace hedgehog
