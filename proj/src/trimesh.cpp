#include "meshlap/trimesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace meshlap {

int corner_index(const std::array<int, 3>& tri, int v) {
  for (int c = 0; c < 3; ++c)
    if (tri[c] == v) return c;
  throw MeshError("vertex " + std::to_string(v) + " is not a corner of the triangle");
}

int opposite_vertex(const std::array<int, 3>& tri, const EdgeKey& e) {
  for (int c = 0; c < 3; ++c)
    if (tri[c] != e.i && tri[c] != e.j) return tri[c];
  throw MeshError("triangle does not contain the edge");
}

TriMesh TriMesh::build(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles,
                       const Options& options) {
  std::ostringstream report;
  int problems = 0;
  auto complain = [&](const std::string& msg) {
    report << (problems ? "; " : "") << msg;
    ++problems;
  };

  const int nv = static_cast<int>(vertices.size());
  for (int v = 0; v < nv; ++v)
    if (!isfinite(vertices[v])) complain("vertex " + std::to_string(v) + " has non-finite coordinates");

  Vec3 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
          std::numeric_limits<double>::max()};
  Vec3 hi = -lo;
  for (const Vec3& p : vertices) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  double bbox2 = vertices.empty() ? 0.0 : norm2(hi - lo);

  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& f = triangles[t];
    bool ok = true;
    for (int c = 0; c < 3; ++c) {
      if (f[c] < 0 || f[c] >= nv) {
        complain("triangle " + std::to_string(t) + " references vertex " + std::to_string(f[c]));
        ok = false;
      }
    }
    if (ok && (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])) {
      complain("triangle " + std::to_string(t) + " repeats a vertex");
      ok = false;
    }
    if (ok && bbox2 > 0.0 &&
        triangle_area(vertices[f[0]], vertices[f[1]], vertices[f[2]]) < 1e-14 * bbox2) {
      complain("triangle " + std::to_string(t) + " is degenerate (area below 1e-14 * bbox^2)");
    }
  }
  if (problems) throw MeshError("mesh validation failed: " + report.str());

  TriMesh mesh;
  mesh.vertices_ = std::move(vertices);
  mesh.triangles_ = std::move(triangles);
  mesh.vertex_faces_.resize(mesh.vertices_.size());

  // Edge table plus directed-edge counts for the orientation check.
  std::map<std::pair<int, int>, int> directed;
  for (int t = 0; t < mesh.n_triangles(); ++t) {
    const auto& f = mesh.triangles_[t];
    for (int c = 0; c < 3; ++c) {
      int a = f[c], b = f[(c + 1) % 3];
      mesh.edge_faces_[EdgeKey(a, b)].push_back(t);
      ++directed[{a, b}];
      mesh.vertex_faces_[f[c]].push_back(t);
    }
  }

  for (const auto& [e, faces] : mesh.edge_faces_) {
    if (options.require_manifold && faces.size() > 2)
      complain("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") has " +
               std::to_string(faces.size()) + " incident triangles");
    if (options.require_consistent_orientation && faces.size() == 2) {
      if (directed[{e.i, e.j}] != 1 || directed[{e.j, e.i}] != 1)
        complain("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                 ") is traversed twice in the same direction (inconsistent winding)");
    }
  }
  if (problems) throw MeshError("mesh validation failed: " + report.str());
  return mesh;
}

const std::vector<int>& TriMesh::faces_of(const EdgeKey& e) const {
  auto it = edge_faces_.find(e);
  if (it == edge_faces_.end())
    throw MeshError("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") not in mesh");
  return it->second;
}

double TriMesh::face_area(int t) const {
  const auto& f = triangles_[t];
  return triangle_area(vertices_[f[0]], vertices_[f[1]], vertices_[f[2]]);
}

Vec3 TriMesh::face_normal(int t) const {
  const auto& f = triangles_[t];
  return normalized(cross(vertices_[f[1]] - vertices_[f[0]], vertices_[f[2]] - vertices_[f[0]]));
}

double TriMesh::angle_at(int t, int v) const {
  const auto& f = triangles_[t];
  int c = corner_index(f, v);
  return corner_angle(vertices_[f[c]], vertices_[f[(c + 1) % 3]], vertices_[f[(c + 2) % 3]]);
}

double TriMesh::cotan_at(int t, int v) const {
  const auto& f = triangles_[t];
  int c = corner_index(f, v);
  return corner_cotan(vertices_[f[c]], vertices_[f[(c + 1) % 3]], vertices_[f[(c + 2) % 3]]);
}

EdgeDihedral TriMesh::edge_dihedral(const EdgeKey& e) const {
  const auto& faces = faces_of(e);
  if (faces.size() == 1) return {0.0, true};
  if (faces.size() > 2) {
    std::string list;
    for (int t : faces) list += (list.empty() ? "" : ", ") + std::to_string(t);
    throw MeshError("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                    ") is non-manifold; incident triangles: " + list);
  }
  int a1 = opposite_vertex(triangles_[faces[0]], e);
  int a2 = opposite_vertex(triangles_[faces[1]], e);
  return {hinge_angle(vertices_[e.i], vertices_[e.j], vertices_[a1], vertices_[a2]), false};
}

std::pair<double, double> TriMesh::opposite_angles(const EdgeKey& e) const {
  const auto& faces = faces_of(e);
  if (faces.size() != 2)
    throw MeshError("opposite_angles needs an interior edge; edge (" + std::to_string(e.i) + "," +
                    std::to_string(e.j) + ") has " + std::to_string(faces.size()) + " triangle(s)");
  double alpha = angle_at(faces[0], opposite_vertex(triangles_[faces[0]], e));
  double beta = angle_at(faces[1], opposite_vertex(triangles_[faces[1]], e));
  return {alpha, beta};
}

bool TriMesh::is_interior_vertex(int v) const {
  for (int t : vertex_faces_[v]) {
    const auto& f = triangles_[t];
    int c = corner_index(f, v);
    for (int other : {f[(c + 1) % 3], f[(c + 2) % 3]}) {
      if (faces_of(EdgeKey(v, other)).size() != 2) return false;
    }
  }
  return !vertex_faces_[v].empty();
}

std::vector<int> TriMesh::one_ring(int v) const {
  const auto& faces = vertex_faces_[v];
  if (faces.empty()) throw MeshError("vertex " + std::to_string(v) + " is isolated");

  // Walk triangles around v following the winding: in each triangle (v, a, b)
  // the successor of a is b.
  std::map<int, int> next;
  for (int t : faces) {
    const auto& f = triangles_[t];
    int c = corner_index(f, v);
    next[f[(c + 1) % 3]] = f[(c + 2) % 3];
  }
  std::vector<int> ring;
  ring.reserve(next.size());
  int start = next.begin()->first;
  int cur = start;
  do {
    ring.push_back(cur);
    auto it = next.find(cur);
    if (it == next.end())
      throw MeshError("vertex " + std::to_string(v) + " has an open one-ring (boundary vertex)");
    cur = it->second;
  } while (cur != start && ring.size() <= next.size());
  if (ring.size() != next.size() || cur != start)
    throw MeshError("vertex " + std::to_string(v) + " has an open or non-disk one-ring");
  return ring;
}

double TriMesh::mean_edge_length() const {
  if (edge_faces_.empty()) return 0.0;
  double total = 0.0;
  for (const auto& [e, faces] : edge_faces_) total += norm(vertices_[e.j] - vertices_[e.i]);
  return total / static_cast<double>(edge_faces_.size());
}

} // namespace meshlap
