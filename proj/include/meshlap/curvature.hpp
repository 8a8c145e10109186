#pragma once

#include "meshlap/trimesh.hpp"

#include <vector>

namespace meshlap {

// Gradient-of-area mean curvature vector at an interior vertex.
struct VertexCurvature {
  int vertex = -1;
  Vec3 H_vec;
  double one_ring_area = 0.0;
};

// H = 1/2 sum_i (cot alpha_i + cot beta_i)(v - v_i) over the one-ring.
// Throws for boundary vertices (the formula needs a closed ring).
VertexCurvature vertex_mean_curvature(const TriMesh& mesh, int v);

// The same vector accumulated from in-plane 90-degree edge rotations,
// sum over incident triangles (v, a, b) of 1/2 s x (b - a) with s the unit
// face normal. Kept as an independent route to vertex_mean_curvature.
Vec3 vertex_mean_curvature_rotation(const TriMesh& mesh, int v);

// |H_e| = sin((pi - theta)/2) |e| = cos(theta/2) |e|; theta in [0, pi]
// (theta = 0 is the boundary convention, giving |e|).
double edge_mean_curvature(double theta, double edge_len);

// |H_e^c| = (1 - cos theta)/sin theta * |e|/2 = tan(theta/2) |e|/2, the
// radius of the bitangent circle in the edge cross-section. theta = 0 gives
// 0 (hinge folded flat onto itself), theta = pi gives the infinity sentinel.
double reciprocal_mean_curvature(double theta, double edge_len);

// Cross-section of the bitangent circle construction in the dual plane of an
// edge: the edge midpoint at the origin, the two tangent points at distance
// |e|/2 along the face traces, and the circle center at height h above the
// first trace.
struct TangentSphereSection {
  double c_ij[2] = {0, 0};
  double c_ijk[2] = {0, 0};
  double c_ijl[2] = {0, 0};
  double c_ijkl[2] = {0, 0};
  double h = 0.0;
};

// theta strictly inside (0, pi); throws otherwise.
TangentSphereSection tangent_sphere_section(double theta, double edge_len);

// Order-n associated mean curvature
//   1/(n-1) ((1-cos theta)/sin theta)^n sin^{n+1}((pi-theta)/2),
// evaluated as 1/(n-1) sin^n(theta/2) cos(theta/2). theta in [0, pi], n >= 2.
double associated_mean_curvature(double theta, int n);
// Literal form, for checking the simplification on (0, pi).
double associated_mean_curvature_literal(double theta, int n);

// Candidate edge-curvature angle functions.
enum class Candidate { F, G, P, Q };

// Simplified closed forms; P and Q return the infinity sentinel at theta = 0.
double candidate_value(Candidate c, double theta);
// Defining expressions, valid strictly inside (0, pi).
double candidate_value_defining(Candidate c, double theta);

} // namespace meshlap
