#pragma once

// JSON body files, reports and perturbation traces. Exact rationals are
// written as "p/q" strings.

#include "hedgehog/convexity.hpp"
#include "hedgehog/perturb.hpp"

#include <json.hpp>

#include <string>

namespace hedgehog {

using Json = nlohmann::json;

/// Accepts "p/q" and decimal strings, integers, and floats (taken at their
/// exact binary value).
Rational rational_from_json(const Json& j);
Json to_json(const Rational& v);
Rat2 point_from_json(const Json& j);
Json to_json(const Rat2& v);

Body body_from_json(const Json& j);
Json to_json(const Body& b);
Json to_json(const ConvexPolygon& p);
Json to_json(const SmoothBody& k);

Body read_body_file(const std::string& path);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json to_json(const MiddleHedgehog& m, const HedgehogHull& h);
Json to_json(const ConvexityReport& r);
Json to_json(const CutConstruction& c);
CutConstruction cut_from_json(const Json& j);
Json to_json(const PerturbationTrace& t);
PerturbationTrace trace_from_json(const Json& j);
Json to_json(const SmoothCertificate& c);

}  // namespace hedgehog
