#pragma once

// Convexity points: z is one when (K - z) u (z - K) is convex.

#include "hedgehog/hedgehog.hpp"

#include <array>

namespace hedgehog {

/// 2z - K.
ConvexPolygon reflect(const ConvexPolygon& k, const Rat2& z);
SmoothBody reflect(const SmoothBody& k, Vec2d z);

/// Exact: area(conv(A u B)) == area(A) + area(B) - area(A n B) with A = K - z, B = z - K.
bool is_convexity_point(const ConvexPolygon& k, const Rat2& z);

/// Tolerance mode: the same identity on inscribed polygons with `samples`
/// boundary points, accepted when the relative area defect is <= tolerance.
bool is_convexity_point(const SmoothBody& k, Vec2d z, std::size_t samples = 2048,
                        double tolerance = 1e-9);

struct Candidate {
  Rat2 point;
  std::size_t corner = 0;  // index into the hedgehog's corners
  bool verified = false;
};

/// Hull vertices of the middle hedgehog, each verified exactly; a failed
/// verification throws Error(internal). Throws Error(parallel_edges).
std::vector<Candidate> candidate_convexity_points(const ConvexPolygon& k);

/// All points of an (grid+1)^2 lattice over the bounding box that lie in K
/// and pass is_convexity_point. grid >= 16.
std::vector<Rat2> brute_force_convexity_points(const ConvexPolygon& k, std::size_t grid);

struct ConvexityReport {
  bool symmetric = false;
  std::optional<Rat2> center;
  bool from_oracle = false;  // candidates came from the brute-force grid
  std::vector<Candidate> candidates;
  std::vector<Rat2> verified;
  std::optional<std::array<Rat2, 3>> triple;
};

/// Symmetric bodies report their center. Otherwise candidates come from the
/// hedgehog hull; with parallel edges they come from a brute-force grid of
/// size `fallback_grid`, or Error(parallel_edges) is thrown when it is 0.
ConvexityReport verify_theorem1(const ConvexPolygon& k, std::size_t fallback_grid = 0);

/// First triple (in list order) with nonzero orientation.
std::optional<std::array<Rat2, 3>> affine_independent_triple(const std::vector<Rat2>& points);

}  // namespace hedgehog
