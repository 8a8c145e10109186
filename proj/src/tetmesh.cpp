#include "meshlap/tetmesh.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace meshlap {

TetMesh TetMesh::build(std::vector<Vec3> vertices, std::vector<std::array<int, 4>> tets) {
  std::ostringstream report;
  int problems = 0;
  auto complain = [&](const std::string& msg) {
    report << (problems ? "; " : "") << msg;
    ++problems;
  };

  const int nv = static_cast<int>(vertices.size());
  for (int v = 0; v < nv; ++v)
    if (!isfinite(vertices[v])) complain("vertex " + std::to_string(v) + " has non-finite coordinates");

  for (std::size_t t = 0; t < tets.size(); ++t) {
    auto& tet = tets[t];
    bool ok = true;
    for (int c = 0; c < 4; ++c) {
      if (tet[c] < 0 || tet[c] >= nv) {
        complain("tet " + std::to_string(t) + " references vertex " + std::to_string(tet[c]));
        ok = false;
      }
    }
    for (int a = 0; ok && a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (tet[a] == tet[b]) {
          complain("tet " + std::to_string(t) + " repeats a vertex");
          ok = false;
          break;
        }
    if (!ok) continue;

    double vol = signed_tet_volume(vertices[tet[0]], vertices[tet[1]], vertices[tet[2]], vertices[tet[3]]);
    if (vol < 0.0) {
      std::swap(tet[2], tet[3]);
      vol = -vol;
    }
    if (vol <= 0.0) complain("tet " + std::to_string(t) + " is degenerate (zero volume)");
  }
  if (problems) throw MeshError("tet mesh validation failed: " + report.str());

  TetMesh mesh;
  mesh.vertices_ = std::move(vertices);
  mesh.tets_ = std::move(tets);

  for (int t = 0; t < mesh.n_tets(); ++t) {
    const auto& tet = mesh.tets_[t];
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) mesh.edge_tets_[EdgeKey(tet[a], tet[b])].push_back(t);
      mesh.face_tets_[FaceKey(tet[(a + 1) % 4], tet[(a + 2) % 4], tet[(a + 3) % 4])].push_back(t);
    }
  }
  for (const auto& [f, owners] : mesh.face_tets_) {
    if (owners.size() > 2)
      complain("face (" + std::to_string(f.v[0]) + "," + std::to_string(f.v[1]) + "," +
               std::to_string(f.v[2]) + ") is shared by " + std::to_string(owners.size()) + " tets");
  }
  if (problems) throw MeshError("tet mesh validation failed: " + report.str());
  return mesh;
}

const std::vector<int>& TetMesh::tets_of(const EdgeKey& e) const {
  auto it = edge_tets_.find(e);
  if (it == edge_tets_.end())
    throw MeshError("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") not in tet mesh");
  return it->second;
}

double TetMesh::tet_volume_of(int t) const {
  const auto& tet = tets_[t];
  return tet_volume(vertices_[tet[0]], vertices_[tet[1]], vertices_[tet[2]], vertices_[tet[3]]);
}

double TetMesh::total_volume() const {
  double v = 0.0;
  for (int t = 0; t < n_tets(); ++t) v += tet_volume_of(t);
  return v;
}

std::pair<int, int> TetMesh::opposite_edge(int t, const EdgeKey& e) const {
  const auto& tet = tets_[t];
  int k = -1, l = -1;
  for (int c = 0; c < 4; ++c) {
    if (tet[c] == e.i || tet[c] == e.j) continue;
    (k < 0 ? k : l) = tet[c];
  }
  if (k < 0 || l < 0)
    throw MeshError("tet " + std::to_string(t) + " does not contain edge (" + std::to_string(e.i) +
                    "," + std::to_string(e.j) + ")");
  return {k, l};
}

double TetMesh::tet_dihedral(int t, const EdgeKey& e) const {
  auto [k, l] = opposite_edge(t, e);
  return hinge_angle(vertices_[e.i], vertices_[e.j], vertices_[k], vertices_[l]);
}

} // namespace meshlap
