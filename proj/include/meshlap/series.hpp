#pragma once

#include "meshlap/curvature.hpp"

#include <vector>

namespace meshlap {

// Truncated real power series sum_k c[k] theta^k with a fixed degree bound.
struct SeriesPoly {
  std::vector<double> c;

  SeriesPoly() = default;
  explicit SeriesPoly(int degree_bound) : c(degree_bound + 1, 0.0) {}

  int degree_bound() const { return static_cast<int>(c.size()) - 1; }
  double operator[](int k) const { return c[k]; }
};

constexpr int kDefaultSeriesDegree = 12;

SeriesPoly series_add(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly series_sub(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b); // truncated product
SeriesPoly series_scale(const SeriesPoly& a, double s);
SeriesPoly series_pow(const SeriesPoly& a, int n);

// Maclaurin series of sin(s * theta) and cos(s * theta).
SeriesPoly sin_series(int degree_bound, double scale = 1.0);
SeriesPoly cos_series(int degree_bound, double scale = 1.0);

// exp of a series; a nonzero constant term is factored out as the scalar
// e^{c0} before the recurrence runs.
SeriesPoly exp_series(const SeriesPoly& u);

struct ComplexSeries {
  SeriesPoly re, im;
};

// Curvature series for the entire candidates (F, G); P and Q have an
// essential singularity at 0 and are rejected.
SeriesPoly candidate_series(Candidate c, int degree_bound = kDefaultSeriesDegree);

// Series of the order-n associated mean curvature 1/(n-1) sin^n(t/2) cos(t/2).
SeriesPoly associated_series(int n, int degree_bound = kDefaultSeriesDegree);

// e^{-curv(theta)} e^{i theta} as a pair of real series. The curvature series
// must be finite at 0 (which SeriesPoly guarantees structurally).
ComplexSeries mobius_series(const SeriesPoly& curv);

// Coefficient-wise re + im, the quantity tabulated for each transformed graph.
SeriesPoly taylor_sum(const ComplexSeries& cs);

struct OrderGap {
  int leading_degree = -1;
  double leading_coeff = 0.0;
};

// First deviating Taylor degree of the order-n associated curvature graph
// against the untransformed e^{i theta}: computes
// taylor_sum(mobius(associated_n)) - taylor_sum(mobius(0)) and reports the
// first coefficient above noise. Requires 2 <= n <= degree_bound - 1.
OrderGap order_gap(int n, int degree_bound = kDefaultSeriesDegree);

struct FlatDecayReport {
  Candidate candidate;
  bool flat = false;         // e^{-cand(theta)} / theta^k -> 0 for all k <= max_k
  int max_k = 10;
  double worst_final_ratio = 0.0; // largest end-of-grid ratio across k
};

// Essential-singularity check for P and Q: on a grid in (0, 0.2] descending
// toward 0 the ratios e^{-cand(theta)} / theta^k must decrease monotonically
// and collapse. F and G fail it (finite limits at 0).
FlatDecayReport flat_decay_check(Candidate c, std::vector<double> theta_grid, int max_k = 10);

} // namespace meshlap
