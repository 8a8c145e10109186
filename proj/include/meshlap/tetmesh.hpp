#pragma once

#include "meshlap/trimesh.hpp"

#include <array>
#include <map>
#include <vector>

namespace meshlap {

// Sorted vertex triple keying a tetrahedron face.
struct FaceKey {
  std::array<int, 3> v{};

  FaceKey() = default;
  FaceKey(int a, int b, int c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) throw MeshError("face vertices must be distinct");
  }

  auto operator<=>(const FaceKey&) const = default;
};

// Indexed tetrahedral mesh. Every tet is reordered at construction so its
// signed volume is positive; interior faces are shared by exactly two tets.
class TetMesh {
public:
  static TetMesh build(std::vector<Vec3> vertices, std::vector<std::array<int, 4>> tets);

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_tets() const { return static_cast<int>(tets_.size()); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 4>>& tets() const { return tets_; }
  const Vec3& vertex(int v) const { return vertices_[v]; }
  const std::array<int, 4>& tet(int t) const { return tets_[t]; }

  const std::map<EdgeKey, std::vector<int>>& edge_tets() const { return edge_tets_; }
  const std::map<FaceKey, std::vector<int>>& face_tets() const { return face_tets_; }
  const std::vector<int>& tets_of(const EdgeKey& e) const;

  double tet_volume_of(int t) const;
  double total_volume() const;

  // The two vertices of tet t not on edge e, in tet storage order.
  std::pair<int, int> opposite_edge(int t, const EdgeKey& e) const;

  // Interior dihedral angle inside tet t along its edge e.
  double tet_dihedral(int t, const EdgeKey& e) const;

private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 4>> tets_;
  std::map<EdgeKey, std::vector<int>> edge_tets_;
  std::map<FaceKey, std::vector<int>> face_tets_;
};

} // namespace meshlap
