#pragma once

#include "meshlap/geometry.hpp"
#include "meshlap/vec3.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace meshlap {

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unordered vertex pair, stored with i < j.
struct EdgeKey {
  int i = 0, j = 0;

  EdgeKey() = default;
  EdgeKey(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {
    if (a == b) throw MeshError("edge endpoints must differ");
  }

  auto operator<=>(const EdgeKey&) const = default;
};

// Dihedral angle at an edge. Boundary edges carry the theta := 0 convention
// behind an explicit flag so cot-based formulas cannot consume it silently.
struct EdgeDihedral {
  double theta = 0.0;
  bool boundary = false;
};

// Indexed triangle mesh, immutable after construction. Triangles are
// consistently oriented: every interior edge appears once as (i,j) and once
// as (j,i) across its two incident triangles.
class TriMesh {
public:
  struct Options {
    bool require_manifold = true;
    bool require_consistent_orientation = true;
  };

  // Validates and builds adjacency; throws MeshError with a report of every
  // problem found (bad indices, orientation, non-manifold edges, degenerate
  // triangles with area < 1e-14 * bbox^2).
  static TriMesh build(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles,
                       const Options& options = {});

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_triangles() const { return static_cast<int>(triangles_.size()); }
  int n_edges() const { return static_cast<int>(edge_faces_.size()); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const Vec3& vertex(int v) const { return vertices_[v]; }
  const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }

  // Edge table in sorted (i, j) order.
  const std::map<EdgeKey, std::vector<int>>& edge_faces() const { return edge_faces_; }
  const std::vector<int>& faces_of(const EdgeKey& e) const;
  bool has_edge(const EdgeKey& e) const { return edge_faces_.count(e) > 0; }
  bool is_boundary_edge(const EdgeKey& e) const { return faces_of(e).size() == 1; }

  double face_area(int t) const;
  Vec3 face_normal(int t) const; // unit, right-handed in winding order

  // Interior angle of triangle t at its corner holding vertex v.
  double angle_at(int t, int v) const;
  double cotan_at(int t, int v) const;

  // Interior dihedral angle at an edge; boundary edges return the flagged
  // theta := 0 convention. Throws on a non-manifold edge, listing the faces.
  EdgeDihedral edge_dihedral(const EdgeKey& e) const;

  // Angles opposite an interior edge, one per incident triangle in face-index
  // order. Throws on boundary edges.
  std::pair<double, double> opposite_angles(const EdgeKey& e) const;

  // Vertices adjacent to v in ring order, for an interior vertex with a full
  // one-ring. Throws if v touches the boundary.
  std::vector<int> one_ring(int v) const;
  bool is_interior_vertex(int v) const;

  double mean_edge_length() const;

private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::map<EdgeKey, std::vector<int>> edge_faces_;
  std::vector<std::vector<int>> vertex_faces_;
};

// Index of vertex v inside triangle tri (0..2); throws if absent.
int corner_index(const std::array<int, 3>& tri, int v);

// The vertex of triangle tri not on edge e; throws if e is not an edge of tri.
int opposite_vertex(const std::array<int, 3>& tri, const EdgeKey& e);

} // namespace meshlap
