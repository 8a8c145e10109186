#include "meshlap/generators.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace meshlap {

namespace {

std::pair<std::vector<Vec3>, std::vector<std::array<int, 3>>> icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1},
  };
  for (Vec3& p : v) p = normalized(p);
  std::vector<std::array<int, 3>> f = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };
  return {v, f};
}

} // namespace

TriMesh icosphere(int level) {
  if (level < 0) throw std::invalid_argument("icosphere: level must be >= 0");
  auto [verts, faces] = icosahedron();

  for (int pass = 0; pass < level; ++pass) {
    std::map<EdgeKey, int> midpoint;
    auto mid = [&](int a, int b) {
      EdgeKey key(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      int idx = static_cast<int>(verts.size());
      verts.push_back(normalized(verts[a] + verts[b]));
      midpoint.emplace(key, idx);
      return idx;
    };

    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      int m01 = mid(f[0], f[1]);
      int m12 = mid(f[1], f[2]);
      int m20 = mid(f[2], f[0]);
      next.push_back({f[0], m01, m20});
      next.push_back({f[1], m12, m01});
      next.push_back({f[2], m20, m12});
      next.push_back({m01, m12, m20});
    }
    faces = std::move(next);
  }
  return TriMesh::build(std::move(verts), std::move(faces));
}

TetMesh regular_tet() {
  // Vertices of a regular tetrahedron inscribed in a cube, scaled to unit edges.
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<Vec3> v = {
      Vec3{1, 1, 1} * s, Vec3{1, -1, -1} * s, Vec3{-1, 1, -1} * s, Vec3{-1, -1, 1} * s};
  return TetMesh::build(std::move(v), {{0, 1, 2, 3}});
}

TetMesh cube_tets(int n) {
  if (n < 1) throw std::invalid_argument("cube_tets: n must be >= 1");
  const int m = n + 1;
  auto vid = [&](int i, int j, int k) { return (k * m + j) * m + i; };

  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(m) * m * m);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i)
        verts.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n,
                         static_cast<double>(k) / n});

  // Kuhn subdivision: one tet per permutation of the unit steps along the
  // main diagonal of each cell. Same diagonal in every cell keeps shared
  // faces conforming.
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::array<int, 4>> tets;
  tets.reserve(static_cast<std::size_t>(n) * n * n * 6);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (const auto& p : perms) {
          int c[3] = {i, j, k};
          std::array<int, 4> tet{};
          tet[0] = vid(c[0], c[1], c[2]);
          for (int step = 0; step < 3; ++step) {
            ++c[p[step]];
            tet[step + 1] = vid(c[0], c[1], c[2]);
          }
          tets.push_back(tet);
        }
  return TetMesh::build(std::move(verts), std::move(tets));
}

TriMesh two_triangle_hinge(double theta) {
  if (!(theta > 0.0 && theta <= M_PI))
    throw std::invalid_argument("two_triangle_hinge: theta must be in (0, pi]");
  std::vector<Vec3> v = {
      {0, 0, 0}, {1, 0, 0}, {0.5, 1, 0}, {0.5, std::cos(theta), std::sin(theta)}};
  return TriMesh::build(std::move(v), {{0, 1, 2}, {1, 0, 3}});
}

TriMesh planar_grid(int n) {
  if (n < 1) throw std::invalid_argument("planar_grid: n must be >= 1");
  const int m = n + 1;
  std::vector<Vec3> verts;
  verts.reserve(static_cast<std::size_t>(m) * m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      verts.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n, 0.0});

  std::vector<std::array<int, 3>> faces;
  faces.reserve(static_cast<std::size_t>(n) * n * 2);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int a = j * m + i, b = a + 1, c = a + m, d = c + 1;
      faces.push_back({a, b, d});
      faces.push_back({a, d, c});
    }
  return TriMesh::build(std::move(verts), std::move(faces));
}

TriMesh triangulated_disk(int rings) {
  if (rings < 1) throw std::invalid_argument("triangulated_disk: rings must be >= 1");
  std::vector<Vec3> verts = {{0, 0, 0}};
  std::vector<int> ring_start = {0};
  for (int r = 1; r <= rings; ++r) {
    ring_start.push_back(static_cast<int>(verts.size()));
    double radius = static_cast<double>(r) / rings;
    int count = 6 * r;
    for (int s = 0; s < count; ++s) {
      double a = 2.0 * M_PI * s / count;
      verts.push_back({radius * std::cos(a), radius * std::sin(a), 0.0});
    }
  }

  std::vector<std::array<int, 3>> faces;
  for (int s = 0; s < 6; ++s) faces.push_back({0, ring_start[1] + s, ring_start[1] + (s + 1) % 6});
  for (int r = 1; r < rings; ++r) {
    int inner = ring_start[r], outer = ring_start[r + 1];
    int ni = 6 * r, no = 6 * (r + 1);
    // March around both rings. Each of the 6 sectors of the outer ring has
    // one extra vertex, handled by the corner fan step.
    int i = 0;
    for (int o = 0; o < no; ++o) {
      int o2 = (o + 1) % no;
      faces.push_back({inner + i % ni, outer + o, outer + o2});
      // Advance the inner pointer except at sector corners (o multiple of r+1).
      if ((o + 1) % (r + 1) != 0) {
        int i2 = (i + 1) % ni;
        faces.push_back({inner + i % ni, outer + o2, inner + i2});
        i = i2;
      }
    }
  }
  return TriMesh::build(std::move(verts), std::move(faces));
}

} // namespace meshlap
