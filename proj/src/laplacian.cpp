#include "meshlap/laplacian.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace meshlap {

std::string scheme_name(WeightScheme scheme, int order) {
  switch (scheme) {
    case WeightScheme::TriCotan: return "tri-cotan";
    case WeightScheme::TetPrimal: return "tet-primal";
    case WeightScheme::TetDual: return "tet-dual";
    case WeightScheme::Associated: return "assoc-" + std::to_string(order);
  }
  return "unknown";
}

double tri_cotan_term(const Vec3& pi, const Vec3& pj, const Vec3& pk) {
  return 0.5 * corner_cotan(pk, pi, pj);
}

double tri_cotan_term_normals(const Vec3& pi, const Vec3& pj, const Vec3& pk) {
  double area = triangle_area(pi, pj, pk);
  if (area == 0.0) throw std::invalid_argument("tri_cotan_term_normals: degenerate triangle");
  Vec3 s = normalized(cross(pj - pi, pk - pi));
  Vec3 ni = cross(s, pk - pj); // conormal opposite pi
  Vec3 nj = cross(s, pi - pk); // conormal opposite pj
  return -dot(ni, nj) / (4.0 * area);
}

double tet_primal_term(const Vec3& pi, const Vec3& pj, const Vec3& pk, const Vec3& pl) {
  return norm(pl - pk) / 6.0 * hinge_cotan(pk, pl, pi, pj);
}

namespace {

// Outward area vector of the face opposite `apex`.
Vec3 outward_face_vector(const Vec3& apex, const Vec3& q0, const Vec3& q1, const Vec3& q2) {
  Vec3 s = 0.5 * cross(q1 - q0, q2 - q0);
  return dot(s, apex - q0) > 0.0 ? -s : s;
}

} // namespace

double tet_primal_term_normals(const Vec3& pi, const Vec3& pj, const Vec3& pk, const Vec3& pl) {
  double vol = tet_volume(pi, pj, pk, pl);
  if (vol == 0.0) throw std::invalid_argument("tet_primal_term_normals: degenerate tet");
  Vec3 si = outward_face_vector(pi, pj, pk, pl);
  Vec3 sj = outward_face_vector(pj, pi, pk, pl);
  return -dot(si, sj) / (9.0 * vol);
}

double tet_dual_term(double alpha, double beta, double theta, double len) {
  double s = std::sin(theta);
  if (!(s > 1e-12))
    throw std::invalid_argument("tet_dual_term: dihedral at 0 or pi is degenerate");
  double c = std::cos(theta);
  // cot(pi/2) = 0 kills the whole term; the 1/cos factor does not resurrect it.
  if (std::fabs(c) < 1e-14) return 0.0;
  double ca = 1.0 / std::tan(alpha);
  double cb = 1.0 / std::tan(beta);
  return len / 8.0 * (c / s) * (2.0 * ca * cb / c - (ca * ca + cb * cb));
}

double associated_normal_factor_literal(double theta, int n) {
  double rec = (1.0 - std::cos(theta)) / std::sin(theta);
  return std::pow(rec, n) * std::pow(std::sin((M_PI - theta) / 2.0), n + 1);
}

AssociatedParts associated_term_parts(double alpha, double beta, double theta, double len, int n) {
  if (n < 2) throw std::invalid_argument("associated_term: order n must be >= 2");
  if (!(theta > 0.0 && theta <= M_PI))
    throw std::invalid_argument("associated_term: theta must be in (0, pi]");
  double cm = 0.5 * (1.0 / std::tan(alpha) + 1.0 / std::tan(beta));
  AssociatedParts parts;
  parts.tangential = len / (4.0 * n) * (n - 1) * cm;
  parts.normal = len / (4.0 * n) * std::pow(std::sin(theta / 2.0), n) * std::cos(theta / 2.0);
  return parts;
}

double associated_term(double alpha, double beta, double theta, double len, int n) {
  AssociatedParts parts = associated_term_parts(alpha, beta, theta, len, n);
  return parts.tangential + parts.normal;
}

double tri_cotan_weight(const TriMesh& mesh, const EdgeKey& e) {
  double w = 0.0;
  for (int t : mesh.faces_of(e)) {
    int k = opposite_vertex(mesh.triangle(t), e);
    w += tri_cotan_term(mesh.vertex(e.i), mesh.vertex(e.j), mesh.vertex(k));
  }
  return w;
}

EdgeWeights tri_cotan_weights(const TriMesh& mesh) {
  EdgeWeights ws;
  ws.scheme = WeightScheme::TriCotan;
  for (const auto& [e, faces] : mesh.edge_faces()) ws.w[e] = tri_cotan_weight(mesh, e);
  return ws;
}

double tet_primal_weight(const TetMesh& mesh, const EdgeKey& e) {
  double w = 0.0;
  for (int t : mesh.tets_of(e)) {
    auto [k, l] = mesh.opposite_edge(t, e);
    w += tet_primal_term(mesh.vertex(e.i), mesh.vertex(e.j), mesh.vertex(k), mesh.vertex(l));
  }
  return w;
}

EdgeWeights tet_primal_weights(const TetMesh& mesh) {
  EdgeWeights ws;
  ws.scheme = WeightScheme::TetPrimal;
  for (const auto& [e, tets] : mesh.edge_tets()) ws.w[e] = tet_primal_weight(mesh, e);
  return ws;
}

double tet_dual_weight(const TetMesh& mesh, const EdgeKey& e) {
  double w = 0.0;
  for (int t : mesh.tets_of(e)) {
    auto [k, l] = mesh.opposite_edge(t, e);
    const Vec3 &pi = mesh.vertex(e.i), &pj = mesh.vertex(e.j);
    double theta = hinge_angle(pi, pj, mesh.vertex(k), mesh.vertex(l));
    double alpha = corner_angle(mesh.vertex(k), pi, pj);
    double beta = corner_angle(mesh.vertex(l), pi, pj);
    double len = norm(pj - pi);
    // w_ijkl + w_ijlk: the second term swaps the two faces meeting at the edge.
    w += tet_dual_term(alpha, beta, theta, len) + tet_dual_term(beta, alpha, theta, len);
  }
  return w;
}

EdgeWeights tet_dual_weights(const TetMesh& mesh) {
  EdgeWeights ws;
  ws.scheme = WeightScheme::TetDual;
  for (const auto& [e, tets] : mesh.edge_tets()) ws.w[e] = tet_dual_weight(mesh, e);
  return ws;
}

double associated_weight(const TriMesh& mesh, const EdgeKey& e, int n) {
  EdgeDihedral d = mesh.edge_dihedral(e);
  if (d.boundary)
    throw MeshError("associated_weight needs an interior edge; (" + std::to_string(e.i) + "," +
                    std::to_string(e.j) + ") is a boundary edge");
  auto [alpha, beta] = mesh.opposite_angles(e);
  return associated_term(alpha, beta, d.theta, norm(mesh.vertex(e.j) - mesh.vertex(e.i)), n);
}

EdgeWeights associated_weights(const TriMesh& mesh, int n) {
  EdgeWeights ws;
  ws.scheme = WeightScheme::Associated;
  ws.order = n;
  for (const auto& [e, faces] : mesh.edge_faces()) {
    if (faces.size() == 2) ws.w[e] = associated_weight(mesh, e, n);
  }
  return ws;
}

GraphLaplacian GraphLaplacian::assemble(const EdgeWeights& weights, int n_vertices) {
  GraphLaplacian L;
  L.n_ = n_vertices;
  L.diag_.assign(n_vertices, 0.0);
  for (const auto& [e, w] : weights.w) {
    if (e.i < 0 || e.j >= n_vertices)
      throw std::invalid_argument("assemble: edge (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ") outside vertex range");
    L.off_[e] = w;
    L.diag_[e.i] -= w;
    L.diag_[e.j] -= w;
  }
  return L;
}

double GraphLaplacian::entry(int i, int j) const {
  if (i == j) return diag_[i];
  auto it = off_.find(EdgeKey(i, j));
  return it == off_.end() ? 0.0 : it->second;
}

std::vector<double> GraphLaplacian::apply(const std::vector<double>& f) const {
  if (static_cast<int>(f.size()) != n_)
    throw std::invalid_argument("apply: dimension mismatch");
  std::vector<double> out(n_, 0.0);
  for (int i = 0; i < n_; ++i) out[i] = diag_[i] * f[i];
  for (const auto& [e, w] : off_) {
    out[e.i] += w * f[e.j];
    out[e.j] += w * f[e.i];
  }
  return out;
}

double dirichlet_energy(const GraphLaplacian& L, const std::vector<double>& f) {
  std::vector<double> Lf = L.apply(f);
  double fLf = 0.0;
  for (int i = 0; i < L.dim(); ++i) fLf += f[i] * Lf[i];
  return -fLf;
}

double dirichlet_energy_edge_sum(const EdgeWeights& weights, const std::vector<double>& f) {
  double energy = 0.0;
  for (const auto& [e, w] : weights.w) {
    double d = f[e.i] - f[e.j];
    energy += w * d * d;
  }
  return energy;
}

DirichletSolution solve_dirichlet(const DirichletProblem& problem) {
  const GraphLaplacian& L = problem.laplacian;
  const int n = L.dim();
  if (problem.boundary.size() != problem.boundary_values.size())
    throw std::invalid_argument("solve_dirichlet: boundary index/value length mismatch");

  std::vector<char> is_boundary(n, 0);
  std::vector<double> values(n, 0.0);
  for (std::size_t b = 0; b < problem.boundary.size(); ++b) {
    int v = problem.boundary[b];
    if (v < 0 || v >= n) throw std::invalid_argument("solve_dirichlet: boundary index out of range");
    if (is_boundary[v]) throw std::invalid_argument("solve_dirichlet: duplicate boundary index");
    is_boundary[v] = 1;
    values[v] = problem.boundary_values[b];
  }

  std::vector<int> interior;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!is_boundary[v]) {
      slot[v] = static_cast<int>(interior.size());
      interior.push_back(v);
    }
  }

  DirichletSolution sol;
  sol.values = values;
  if (interior.empty()) return sol;

  const int m = static_cast<int>(interior.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m); // -L restricted to interior
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  for (int r = 0; r < m; ++r) A(r, r) = -L.diagonal(interior[r]);
  for (const auto& [e, w] : L.off_diagonal()) {
    int si = slot[e.i], sj = slot[e.j];
    if (si >= 0 && sj >= 0) {
      A(si, sj) = -w;
      A(sj, si) = -w;
    } else if (si >= 0) {
      rhs(si) += w * values[e.j];
    } else if (sj >= 0) {
      rhs(sj) += w * values[e.i];
    }
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  sol.rcond = lu.rcond();
  if (!(sol.rcond > 1e-14))
    throw SolveError("interior system is numerically singular (rcond estimate " +
                     std::to_string(sol.rcond) + ")");
  Eigen::VectorXd x = lu.solve(rhs);
  for (int r = 0; r < m; ++r) sol.values[interior[r]] = x(r);

  std::vector<double> Lf = L.apply(sol.values);
  double res = 0.0;
  for (int v : interior) res = std::max(res, std::fabs(Lf[v]));
  sol.residual_inf = res;
  return sol;
}

} // namespace meshlap
