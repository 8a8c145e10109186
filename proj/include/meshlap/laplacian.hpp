#pragma once

#include "meshlap/tetmesh.hpp"
#include "meshlap/trimesh.hpp"

#include <map>
#include <string>
#include <vector>

namespace meshlap {

enum class WeightScheme { TriCotan, TetPrimal, TetDual, Associated };

std::string scheme_name(WeightScheme scheme, int order = 0);

// Symmetric per-edge weights of one scheme on one mesh.
struct EdgeWeights {
  WeightScheme scheme = WeightScheme::TriCotan;
  int order = 0; // ansatz order n, Associated only
  std::map<EdgeKey, double> w;
};

// --- per-element weight terms -----------------------------------------------
//
// Each term exists in the two algebraic forms the constructions provide; the
// forms are cross-checked against each other in the tests.

// Triangle [pi, pj, pk] contribution to edge (i, j): 1/2 cot(angle at pk).
double tri_cotan_term(const Vec3& pi, const Vec3& pj, const Vec3& pk);
// The same through the conormals: -(n_i . n_j) / (4 Area).
double tri_cotan_term_normals(const Vec3& pi, const Vec3& pj, const Vec3& pk);

// Tet contribution to edge (i, j): 1/6 |kl| cot(dihedral at the opposite
// edge [k, l]).
double tet_primal_term(const Vec3& pi, const Vec3& pj, const Vec3& pk, const Vec3& pl);
// The same through outward face area vectors: -(S_i . S_j) / (9 Vol).
double tet_primal_term_normals(const Vec3& pi, const Vec3& pj, const Vec3& pk, const Vec3& pl);

// Dual-construction term for an edge of length `len` with dihedral `theta` on
// the edge and face angles `alpha`, `beta` opposite it in the two incident
// faces:
//   (len/8) cot(theta) (2 cot(alpha) cot(beta) / cos(theta)
//                       - (cot^2(alpha) + cot^2(beta))).
// theta = pi/2 gives a zero term (cot(pi/2) = 0); theta at 0 or pi throws.
double tet_dual_term(double alpha, double beta, double theta, double len);

// Ansatz term of order n >= 2:
//   (len/4n) [ (n-1) (cot(alpha)+cot(beta))/2
//              + ((1-cos theta)/sin theta)^n sin^{n+1}((pi-theta)/2) ],
// with the normal factor evaluated as sin^n(theta/2) cos(theta/2) so the
// theta -> pi limit stays finite.
double associated_term(double alpha, double beta, double theta, double len, int n);
struct AssociatedParts {
  double tangential = 0.0;
  double normal = 0.0;
};
AssociatedParts associated_term_parts(double alpha, double beta, double theta, double len, int n);
// The normal factor in its literal form (for cross-checking the simplification).
double associated_normal_factor_literal(double theta, int n);

// --- per-edge weights --------------------------------------------------------

// Sum of tri_cotan_term over the incident triangles (one term on boundary).
double tri_cotan_weight(const TriMesh& mesh, const EdgeKey& e);
EdgeWeights tri_cotan_weights(const TriMesh& mesh);

// Sum of tet_primal_term over incident tets.
double tet_primal_weight(const TetMesh& mesh, const EdgeKey& e);
EdgeWeights tet_primal_weights(const TetMesh& mesh);

// Sum of w_ijkl + w_ijlk over incident tets (the two terms swap the roles of
// the faces meeting at the edge).
double tet_dual_weight(const TetMesh& mesh, const EdgeKey& e);
EdgeWeights tet_dual_weights(const TetMesh& mesh);

// Ansatz weight on an interior triangle-mesh edge, reading the two incident
// triangles as the faces of a virtual tet; only theta, alpha, beta and the
// edge length enter.
double associated_weight(const TriMesh& mesh, const EdgeKey& e, int n);
EdgeWeights associated_weights(const TriMesh& mesh, int n);

// --- assembled operator ------------------------------------------------------

// Sparse symmetric Laplacian: L_ij = w_ij off the diagonal and
// L_ii = -sum_j w_ij, so constants are in the kernel by construction.
class GraphLaplacian {
public:
  static GraphLaplacian assemble(const EdgeWeights& weights, int n_vertices);

  int dim() const { return n_; }
  const std::map<EdgeKey, double>& off_diagonal() const { return off_; }
  double diagonal(int i) const { return diag_[i]; }
  double entry(int i, int j) const;

  std::vector<double> apply(const std::vector<double>& f) const;

private:
  int n_ = 0;
  std::map<EdgeKey, double> off_;
  std::vector<double> diag_;
};

// Discrete Dirichlet energy -f^T L f.
double dirichlet_energy(const GraphLaplacian& L, const std::vector<double>& f);
// Independent route: sum over edges of w_ij (f_i - f_j)^2.
double dirichlet_energy_edge_sum(const EdgeWeights& weights, const std::vector<double>& f);

struct DirichletProblem {
  GraphLaplacian laplacian;
  std::vector<int> boundary;          // vertex indices, any order, no duplicates
  std::vector<double> boundary_values; // same length as boundary
};

struct DirichletSolution {
  std::vector<double> values;   // all vertices; boundary entries as prescribed
  double residual_inf = 0.0;    // max |(L f)_i| over interior i
  double rcond = 1.0;           // reciprocal condition estimate of the interior block
};

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interior values making f discrete-harmonic; throws SolveError with the
// condition estimate when the interior block is numerically singular.
DirichletSolution solve_dirichlet(const DirichletProblem& problem);

} // namespace meshlap
