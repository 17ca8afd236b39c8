#pragma once

// Static SVG figures of bodies, hedgehogs and cuts.

#include "hedgehog/perturb.hpp"

#include <set>
#include <string>

namespace hedgehog {

enum class Layer { body, hedgehog, hull, corners, convexity_points, affine_diameters, cut_overlay };

const char* to_string(Layer layer);
/// Accepts the names printed by to_string (e.g. "convexity-points").
Layer parse_layer(const std::string& name);

struct RenderSpec {
  int width = 640;
  int height = 640;
  std::set<Layer> layers{Layer::body, Layer::hedgehog, Layer::hull, Layer::corners};
  double stroke = 1.5;  // pixels
  bool labels = false;

  /// Throws Error(invalid_argument) unless width, height >= 64 and a layer is set.
  void validate() const;
};

/// Deterministic SVG 1.1 document. The viewBox is the body's bounding box
/// plus a 10% margin; strong corners are filled dots, weak corners hollow.
std::string render_svg(const Body& body, const RenderSpec& spec, const std::vector<CutConstruction>& cuts = {});

}  // namespace hedgehog
