#include "meshlap/curvature.hpp"

#include "meshlap/laplacian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace meshlap {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_theta_range(double theta, double lo, double hi, const char* who) {
  if (!(theta >= lo && theta <= hi)) throw std::invalid_argument(std::string(who) + ": theta out of range");
}
} // namespace

VertexCurvature vertex_mean_curvature(const TriMesh& mesh, int v) {
  std::vector<int> ring = mesh.one_ring(v); // throws for boundary vertices

  VertexCurvature out;
  out.vertex = v;
  for (int vi : ring) {
    double w = tri_cotan_weight(mesh, EdgeKey(v, vi)); // 1/2 (cot a + cot b)
    out.H_vec += w * (mesh.vertex(v) - mesh.vertex(vi));
  }
  double area = 0.0;
  for (std::size_t s = 0; s < ring.size(); ++s) {
    int a = ring[s], b = ring[(s + 1) % ring.size()];
    area += triangle_area(mesh.vertex(v), mesh.vertex(a), mesh.vertex(b));
  }
  out.one_ring_area = area;
  return out;
}

Vec3 vertex_mean_curvature_rotation(const TriMesh& mesh, int v) {
  std::vector<int> ring = mesh.one_ring(v);
  Vec3 H;
  for (std::size_t s = 0; s < ring.size(); ++s) {
    int a = ring[s], b = ring[(s + 1) % ring.size()];
    Vec3 n = normalized(cross(mesh.vertex(a) - mesh.vertex(v), mesh.vertex(b) - mesh.vertex(v)));
    H += 0.5 * cross(n, mesh.vertex(b) - mesh.vertex(a));
  }
  return H;
}

double edge_mean_curvature(double theta, double edge_len) {
  check_theta_range(theta, 0.0, M_PI, "edge_mean_curvature");
  return std::cos(theta / 2.0) * edge_len;
}

double reciprocal_mean_curvature(double theta, double edge_len) {
  check_theta_range(theta, 0.0, M_PI, "reciprocal_mean_curvature");
  if (theta == 0.0) return 0.0;
  if (theta == M_PI) return kInf;
  return std::tan(theta / 2.0) * edge_len / 2.0;
}

TangentSphereSection tangent_sphere_section(double theta, double edge_len) {
  if (!(theta > 0.0 && theta < M_PI))
    throw std::invalid_argument("tangent_sphere_section: theta must be strictly inside (0, pi)");
  double r = edge_len / 2.0;
  TangentSphereSection s;
  s.c_ijk[0] = r;
  s.c_ijl[0] = r * std::cos(theta);
  s.c_ijl[1] = r * std::sin(theta);
  s.h = r * (1.0 - std::cos(theta)) / std::sin(theta);
  s.c_ijkl[0] = r;
  s.c_ijkl[1] = s.h;
  return s;
}

double associated_mean_curvature(double theta, int n) {
  if (n < 2) throw std::invalid_argument("associated_mean_curvature: order n must be >= 2");
  check_theta_range(theta, 0.0, M_PI, "associated_mean_curvature");
  return std::pow(std::sin(theta / 2.0), n) * std::cos(theta / 2.0) / (n - 1);
}

double associated_mean_curvature_literal(double theta, int n) {
  double rec = (1.0 - std::cos(theta)) / std::sin(theta);
  return std::pow(rec, n) * std::pow(std::sin((M_PI - theta) / 2.0), n + 1) / (n - 1);
}

double candidate_value(Candidate c, double theta) {
  check_theta_range(theta, 0.0, M_PI, "candidate_value");
  switch (c) {
    case Candidate::F: return std::cos(theta / 2.0);
    case Candidate::G: return 0.5 * std::sin(theta / 2.0) * std::sin(theta);
    case Candidate::P:
      if (theta == 0.0) return kInf;
      return 1.0 / std::tan(theta / 2.0);
    case Candidate::Q: {
      if (theta == 0.0) return kInf;
      double sh = std::sin(theta / 2.0);
      return 0.5 * std::sin(theta) / (sh * sh * sh * sh);
    }
  }
  throw std::invalid_argument("candidate_value: unknown candidate");
}

double candidate_value_defining(Candidate c, double theta) {
  if (!(theta > 0.0 && theta < M_PI))
    throw std::invalid_argument("candidate_value_defining: theta must be strictly inside (0, pi)");
  double st = std::sin(theta), ct = std::cos(theta);
  switch (c) {
    case Candidate::F: return std::sin((M_PI - theta) / 2.0);
    case Candidate::G: {
      double rec = (1.0 - ct) / st;
      return rec * rec * std::pow(std::sin((M_PI - theta) / 2.0), 3);
    }
    case Candidate::P: return st / (1.0 - ct);
    case Candidate::Q: {
      double half = std::sin((M_PI - theta) / 2.0);
      return std::pow(st / (1.0 - ct), 3) / (half * half);
    }
  }
  throw std::invalid_argument("candidate_value_defining: unknown candidate");
}

} // namespace meshlap
