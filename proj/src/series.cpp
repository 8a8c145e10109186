#include "meshlap/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace meshlap {

namespace {
void check_same_bound(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.degree_bound() != b.degree_bound())
    throw std::invalid_argument("series degree bounds differ");
}
} // namespace

SeriesPoly series_add(const SeriesPoly& a, const SeriesPoly& b) {
  check_same_bound(a, b);
  SeriesPoly out(a.degree_bound());
  for (int k = 0; k <= a.degree_bound(); ++k) out.c[k] = a.c[k] + b.c[k];
  return out;
}

SeriesPoly series_sub(const SeriesPoly& a, const SeriesPoly& b) {
  check_same_bound(a, b);
  SeriesPoly out(a.degree_bound());
  for (int k = 0; k <= a.degree_bound(); ++k) out.c[k] = a.c[k] - b.c[k];
  return out;
}

SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b) {
  check_same_bound(a, b);
  SeriesPoly out(a.degree_bound());
  for (int i = 0; i <= a.degree_bound(); ++i) {
    if (a.c[i] == 0.0) continue;
    for (int j = 0; i + j <= a.degree_bound(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

SeriesPoly series_scale(const SeriesPoly& a, double s) {
  SeriesPoly out = a;
  for (double& v : out.c) v *= s;
  return out;
}

SeriesPoly series_pow(const SeriesPoly& a, int n) {
  if (n < 0) throw std::invalid_argument("series_pow: negative exponent");
  SeriesPoly out(a.degree_bound());
  out.c[0] = 1.0;
  for (int k = 0; k < n; ++k) out = series_mul(out, a);
  return out;
}

SeriesPoly sin_series(int degree_bound, double scale) {
  SeriesPoly out(degree_bound);
  double term = scale; // scale^(2k+1) / (2k+1)!
  for (int k = 0; 2 * k + 1 <= degree_bound; ++k) {
    out.c[2 * k + 1] = (k % 2 == 0) ? term : -term;
    term *= scale * scale / ((2 * k + 2) * (2 * k + 3));
  }
  return out;
}

SeriesPoly cos_series(int degree_bound, double scale) {
  SeriesPoly out(degree_bound);
  double term = 1.0; // scale^(2k) / (2k)!
  for (int k = 0; 2 * k <= degree_bound; ++k) {
    out.c[2 * k] = (k % 2 == 0) ? term : -term;
    term *= scale * scale / ((2 * k + 1) * (2 * k + 2));
  }
  return out;
}

SeriesPoly exp_series(const SeriesPoly& u) {
  const int d = u.degree_bound();
  const double scale = std::exp(u.c[0]);
  SeriesPoly out(d);
  out.c[0] = 1.0;
  // E' = v' E for v = u - u(0):  n e_n = sum_{k=1..n} k v_k e_{n-k}.
  for (int n = 1; n <= d; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += k * u.c[k] * out.c[n - k];
    out.c[n] = acc / n;
  }
  return series_scale(out, scale);
}

SeriesPoly candidate_series(Candidate c, int degree_bound) {
  switch (c) {
    case Candidate::F: return cos_series(degree_bound, 0.5);
    case Candidate::G:
      return series_scale(series_mul(sin_series(degree_bound, 0.5), sin_series(degree_bound, 1.0)),
                          0.5);
    case Candidate::P:
    case Candidate::Q:
      throw std::invalid_argument(
          "candidate_series: p and q have an essential singularity at 0; use flat_decay_check");
  }
  throw std::invalid_argument("candidate_series: unknown candidate");
}

SeriesPoly associated_series(int n, int degree_bound) {
  if (n < 2) throw std::invalid_argument("associated_series: order n must be >= 2");
  SeriesPoly s = series_pow(sin_series(degree_bound, 0.5), n);
  return series_scale(series_mul(s, cos_series(degree_bound, 0.5)), 1.0 / (n - 1));
}

ComplexSeries mobius_series(const SeriesPoly& curv) {
  for (double v : curv.c)
    if (!std::isfinite(v))
      throw std::invalid_argument("mobius_series: curvature series has non-finite coefficients");
  const int d = curv.degree_bound();
  SeriesPoly damping = exp_series(series_scale(curv, -1.0));
  ComplexSeries out;
  out.re = series_mul(damping, cos_series(d));
  out.im = series_mul(damping, sin_series(d));
  return out;
}

SeriesPoly taylor_sum(const ComplexSeries& cs) { return series_add(cs.re, cs.im); }

OrderGap order_gap(int n, int degree_bound) {
  if (n < 2 || n > degree_bound - 1)
    throw std::invalid_argument("order_gap: need 2 <= n <= degree_bound - 1");
  SeriesPoly with_curv = taylor_sum(mobius_series(associated_series(n, degree_bound)));
  SeriesPoly plain = taylor_sum(mobius_series(SeriesPoly(degree_bound)));
  SeriesPoly diff = series_sub(with_curv, plain);

  double mag = 0.0;
  for (double v : diff.c) mag = std::max(mag, std::fabs(v));
  OrderGap gap;
  for (int k = 0; k <= degree_bound; ++k) {
    if (std::fabs(diff.c[k]) > 1e-6 * mag) {
      gap.leading_degree = k;
      gap.leading_coeff = diff.c[k];
      break;
    }
  }
  return gap;
}

FlatDecayReport flat_decay_check(Candidate c, std::vector<double> theta_grid, int max_k) {
  if (theta_grid.size() < 2) throw std::invalid_argument("flat_decay_check: grid too small");
  for (double t : theta_grid)
    if (!(t > 0.0 && t <= 0.2))
      throw std::invalid_argument("flat_decay_check: grid must lie in (0, 0.2]");
  std::sort(theta_grid.rbegin(), theta_grid.rend()); // descend toward 0

  FlatDecayReport report;
  report.candidate = c;
  report.max_k = max_k;
  bool flat = true;
  double worst = 0.0;
  for (int k = 0; k <= max_k; ++k) {
    double prev = std::numeric_limits<double>::infinity();
    double ratio = 0.0;
    for (double t : theta_grid) {
      ratio = std::exp(-candidate_value(c, t)) / std::pow(t, k);
      if (!(ratio < prev)) flat = false;
      prev = ratio;
    }
    worst = std::max(worst, ratio);
  }
  // Collapse, not just decrease: the end-of-grid ratios must be negligible.
  if (!(worst < 1e-12)) flat = false;
  report.flat = flat;
  report.worst_final_ratio = worst;
  return report;
}

} // namespace meshlap
