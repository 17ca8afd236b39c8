#pragma once

// Cutting opposite vertex pairs to add hull vertices to the middle hedgehog,
// iterating past a target count, then smoothing by circular arcs.

#include "hedgehog/hedgehog.hpp"

namespace hedgehog {

/// A hull vertex x of conv M_P and the outer normal of a line S touching
/// conv M_P only at x.
struct CutTarget {
  std::size_t corner = 0;
  Rat2 x;
  Rat2 s_normal;
  Rat2 cone_begin;  // outer normals of the hull edges before and after x
  Rat2 cone_end;
  double gap_width = 0;  // angular width of the corner's gap in the fan
};

struct CutConstruction {
  Rat2 x;
  std::size_t p_index = 0;  // vertex cut by t-vectors
  std::size_t q_index = 0;  // vertex cut by s-vectors
  Rat2 p;
  Rat2 q;
  std::size_t edge_p = 0;  // E_i: pair edge at p
  std::size_t edge_q = 0;  // E_{i+1}: pair edge at q
  std::size_t edge_j = 0;  // other edge at p
  std::size_t edge_m = 0;  // other edge at q
  Rat2 s_normal;           // outer normal of S, parallel to z - y rotated
  Rational tau;
  Rational sigma;
  Rational lambda;
  Rat2 s;
  Rat2 s1;
  Rat2 s2;
  Rat2 t;
  Rat2 t1;
  Rat2 t2;
  Rat2 y;  // x + lambda (s1 + t2) / 2
  Rat2 z;  // x + lambda (s2 + t1) / 2
};

/// Hull vertices of the hedgehog ordered by decreasing gap width. Throws
/// parallel_edges, long_edge or centrally_symmetric on violated preconditions.
std::vector<CutTarget> cut_targets(const ConvexPolygon& p);
CutTarget select_cut_target(const ConvexPolygon& p);

/// Verified search over roles, tau, sigma and lambda; every returned bundle
/// satisfies all invariants with P_lambda = apply_cut(P, cut). Throws
/// Error(search_exhausted) when the schedule runs out.
CutConstruction build_cut(const ConvexPolygon& p, const CutTarget& target, const Body& k, double eps);

/// Hull of the four new points and the vertices of P other than p and q.
ConvexPolygon apply_cut(const ConvexPolygon& p, const CutConstruction& cut);

/// Hull vertex count of the polygon's middle hedgehog.
std::size_t hull_vertex_count(const ConvexPolygon& p);

struct TraceStep {
  ConvexPolygon polygon;
  std::size_t count = 0;
  std::optional<CutConstruction> cut;  // cut that produced this polygon
  bool contains_body = false;
  bool inside_neighborhood = false;
};

struct PerturbationTrace {
  double eps = 0;
  std::size_t target = 0;
  std::uint64_t seed = 1;
  std::vector<TraceStep> steps;
};

/// Sandwich polygon, then cuts until the count exceeds `target`.
PerturbationTrace increase_hull_vertices(const Body& k, double eps, std::size_t target, std::uint64_t seed = 1);

/// Throws Error(invariant_regression) or Error(internal) on the first step
/// that breaks an invariant; replays every recorded cut.
void check_trace(const PerturbationTrace& trace, const Body& k);

struct SmoothingAttempt {
  double radius = 0;
  std::size_t count = 0;
  double distance = 0;  // sampled Hausdorff distance between M and Q
  bool contained = false;  // K in int M and M in int(K + eps B)
};

struct SmoothCertificate {
  SmoothBody body;
  std::size_t polygon_count = 0;
  std::size_t smooth_count = 0;
  std::vector<SmoothingAttempt> attempts;
};

/// Doubles R from 10 diam(Q) until containment holds and the sampled hull
/// count of M matches Q. Throws Error(radius_schedule_exhausted).
SmoothCertificate finalize_smooth(const ConvexPolygon& q, const Body& k, double eps, std::size_t samples = 4096,
                                  int max_doublings = 16);

/// One attempt of the schedule at a given radius.
SmoothingAttempt smoothing_attempt(const ConvexPolygon& q, const Body& k, double eps, double radius,
                                   std::size_t samples = 4096);

/// Support value of any body at angle phi.
double support_value(const Body& k, double phi);

}  // namespace hedgehog
