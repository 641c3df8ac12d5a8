#include "liegeo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "liegeo/sampling.hpp"
#include "liegeo/tolerances.hpp"

namespace liegeo {

std::string to_string(BasisVerdict v) {
  switch (v) {
    case BasisVerdict::orthonormal_geodesic: return "orthonormal_geodesic";
    case BasisVerdict::geodesic_only: return "geodesic_only";
    case BasisVerdict::fail: return "fail";
  }
  return "fail";
}

double geodesic_residual(const LieAlgebra& alg, const InnerProduct& metric, const Vec& y) {
  const int n = alg.dim();
  detail::require(static_cast<int>(y.size()) == n, "vector has wrong dimension");
  const double yy = metric.ip(y, y);
  detail::require(yy > 0.0, "geodesic residual of the zero vector is undefined");
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = metric.ip(alg.bracket(basis_vector(n, i), y), y);
    s += f * f;
  }
  return std::sqrt(s) / yy;
}

bool is_geodesic_via_image(const LieAlgebra& alg, const InnerProduct& metric, const Vec& y) {
  detail::require(metric.norm(y) > 0.0, "zero vector cannot be geodesic");
  const Mat image = column_space_basis(alg.adjoint(y), tol::rank);
  if (image.cols() == 0) return true;
  const Vec yhat = metric.normalized(y);
  const std::vector<Vec> q = gram_schmidt(metric, image.cols_as_vectors());
  for (const Vec& b : q)
    if (std::fabs(metric.ip(b, yhat)) > tol::algebra) return false;
  return true;
}

BasisReport verify_basis(const LieAlgebra& alg, const InnerProduct& metric,
                         const std::vector<Vec>& vectors) {
  const int n = alg.dim();
  detail::require(static_cast<int>(vectors.size()) == n, "verify_basis wants exactly dim vectors");
  BasisReport rep;
  rep.vectors = vectors;
  rep.geodesic_residuals.reserve(n);
  bool any_zero = false;
  for (const Vec& v : vectors) {
    if (metric.norm(v) == 0.0) {
      any_zero = true;
      rep.geodesic_residuals.push_back(std::numeric_limits<double>::infinity());
    } else {
      rep.geodesic_residuals.push_back(geodesic_residual(alg, metric, v));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      rep.gram_deviation =
          std::max(rep.gram_deviation, std::fabs(metric.ip(vectors[i], vectors[j]) - target));
    }
  rep.independent = !any_zero && n > 0 && rank(Mat::from_cols(vectors), tol::rank) == n;
  if (n == 0) rep.independent = true;

  const bool all_geodesic = !any_zero && std::all_of(rep.geodesic_residuals.begin(),
                                                     rep.geodesic_residuals.end(),
                                                     [](double r) { return r <= tol::basis; });
  if (all_geodesic && rep.gram_deviation <= tol::basis)
    rep.verdict = BasisVerdict::orthonormal_geodesic;
  else if (all_geodesic)
    rep.verdict = BasisVerdict::geodesic_only;
  else
    rep.verdict = BasisVerdict::fail;
  return rep;
}

namespace {

// F_i(y) = <[e_i, y], y>, the quadratic system whose zeros on the unit
// sphere are the geodesic vectors.
Vec eval_system(const LieAlgebra& alg, const InnerProduct& metric, const Vec& y) {
  const int n = alg.dim();
  Vec f(n);
  for (int i = 0; i < n; ++i) f[i] = metric.ip(alg.bracket(basis_vector(n, i), y), y);
  return f;
}

// dF_i/dy_k = <[e_i, e_k], y> + <[e_i, y], e_k>
Mat eval_jacobian(const LieAlgebra& alg, const InnerProduct& metric, const Vec& y) {
  const int n = alg.dim();
  Mat j(n, n);
  for (int i = 0; i < n; ++i) {
    const Vec ei = basis_vector(n, i);
    const Vec biy = alg.bracket(ei, y);
    const Vec g_biy = metric.gram() * biy;
    for (int k = 0; k < n; ++k)
      j(i, k) = metric.ip(alg.bracket(ei, basis_vector(n, k)), y) + g_biy[k];
  }
  return j;
}

void sign_normalize(Vec& y) {
  for (double x : y) {
    if (std::fabs(x) > 1e-12) {
      if (x < 0.0)
        for (double& w : y) w = -w;
      return;
    }
  }
}

}  // namespace

GeodesicSearchResult find_geodesics(const LieAlgebra& alg, const InnerProduct& metric,
                                    const GeodesicSearchConfig& cfg) {
  detail::require(cfg.n_starts >= 1, "need at least one start");
  detail::require(cfg.newton_tol > 0.0 && cfg.dedup_angle > 0.0, "tolerances must be positive");
  const int n = alg.dim();
  GeodesicSearchResult result;
  if (n == 0) return result;
  const double cos_dedup = std::cos(cfg.dedup_angle);

  // solutions with a singular Jacobian (they do occur, e.g. on example5)
  // only converge like sqrt of the residual, so iterate well past the
  // requested tolerance and stop on stagnation instead
  double floor_scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      floor_scale = std::max(floor_scale, max_abs(alg.bracket(basis_vector(n, i), basis_vector(n, j))));
  const double err_floor = 1e-15 * (1.0 + floor_scale);

  for (int start = 0; start < cfg.n_starts; ++start) {
    Rng rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(start)));
    Vec y = random_unit_vector(rng, metric);
    double lambda = 0.0;

    for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
      const Vec f = eval_system(alg, metric, y);
      const Vec gy = metric.gram() * y;
      const double constraint = metric.ip(y, y) - 1.0;

      double err = std::fabs(constraint);
      for (int i = 0; i < n; ++i) err = std::max(err, std::fabs(f[i] + lambda * gy[i]));
      if (err <= err_floor) break;

      // bordered Newton system in (y, lambda)
      Mat big(n + 1, n + 1);
      const Mat jf = eval_jacobian(alg, metric, y);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) big(i, k) = jf(i, k) + lambda * metric.gram()(i, k);
        big(i, n) = gy[i];
        big(n, i) = 2.0 * gy[i];
      }
      Vec rhs(n + 1);
      for (int i = 0; i < n; ++i) rhs[i] = -(f[i] + lambda * gy[i]);
      rhs[n] = -constraint;

      bool accepted = false;
      const auto step = solve_square(big, rhs);
      if (step.has_value()) {
        double alpha = 1.0;
        for (int halving = 0; halving < 25 && !accepted; ++halving) {
          Vec y_try(n);
          for (int k = 0; k < n; ++k) y_try[k] = y[k] + alpha * (*step)[k];
          const double lambda_try = lambda + alpha * (*step)[n];
          if (metric.norm(y_try) < 1e-8) {
            alpha *= 0.5;
            continue;
          }
          const Vec f_try = eval_system(alg, metric, y_try);
          const Vec gy_try = metric.gram() * y_try;
          double err_try = std::fabs(metric.ip(y_try, y_try) - 1.0);
          for (int i = 0; i < n; ++i)
            err_try = std::max(err_try, std::fabs(f_try[i] + lambda_try * gy_try[i]));
          if (err_try < err) {
            y = y_try;
            lambda = lambda_try;
            accepted = true;
          }
          alpha *= 0.5;
        }
      }
      if (accepted) continue;

      // singular or stalled Newton step: damped gradient descent on |F|^2,
      // re-projected to the unit sphere
      Vec grad(n, 0.0);
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) grad[k] += 2.0 * f[i] * jf(i, k);
      const double gnorm = euclidean_norm(grad);
      if (gnorm <= err_floor) break;  // stationary point
      double alpha = 1.0 / (1.0 + gnorm);
      const double base = dot(f, f);
      for (int halving = 0; halving < 30 && !accepted; ++halving) {
        Vec y_try(n);
        for (int k = 0; k < n; ++k) y_try[k] = y[k] - alpha * grad[k];
        if (metric.norm(y_try) > 1e-8) {
          y_try = metric.normalized(y_try);
          const Vec f_try = eval_system(alg, metric, y_try);
          if (dot(f_try, f_try) < base) {
            y = y_try;
            lambda = 0.0;
            accepted = true;
          }
        }
        alpha *= 0.5;
      }
      if (!accepted) break;  // stagnated
    }

    y = metric.normalized(y);
    double residual = geodesic_residual(alg, metric, y);
    // snap numerically-dust coordinates to zero when that does not hurt:
    // degenerate solutions often sit a hair off a coordinate subspace
    {
      Vec snapped = y;
      bool any = false;
      const double snap_level = 1e-5 * max_abs(y);
      for (int k = 0; k < n; ++k)
        if (snapped[k] != 0.0 && std::fabs(snapped[k]) <= snap_level) {
          snapped[k] = 0.0;
          any = true;
        }
      if (any && euclidean_norm(snapped) > 0.0) {
        snapped = metric.normalized(snapped);
        const double r2 = geodesic_residual(alg, metric, snapped);
        // keep the snap when it still certifies a geodesic with a margin;
        // near singular roots the dust coordinates carry position error two
        // orders above the residual
        if (r2 <= residual || r2 <= 0.1 * cfg.newton_tol) {
          y = snapped;
          residual = r2;
        }
      }
    }
    if (residual > cfg.newton_tol) {
      ++result.failed_starts;
      continue;
    }
    ++result.converged_starts;
    sign_normalize(y);
    bool duplicate = false;
    for (const Vec& r : result.vectors)
      if (std::fabs(metric.ip(y, r)) >= cos_dedup) {
        duplicate = true;
        break;
      }
    if (!duplicate) result.vectors.push_back(y);
  }
  return result;
}

int geodesic_span_rank(const LieAlgebra& alg, const InnerProduct& metric,
                       const GeodesicSearchConfig& cfg) {
  const GeodesicSearchResult r = find_geodesics(alg, metric, cfg);
  if (r.vectors.empty()) return 0;
  return rank(Mat::from_cols(r.vectors), tol::rank);
}

std::optional<Vec> refine_geodesic(const LieAlgebra& alg, const InnerProduct& metric, Vec y,
                                   const std::vector<bool>& zero_mask, double tol,
                                   int max_iters) {
  const int n = alg.dim();
  detail::require(static_cast<int>(zero_mask.size()) == n, "mask has wrong dimension");
  std::vector<int> free_coords;
  for (int k = 0; k < n; ++k) {
    if (zero_mask[k])
      y[k] = 0.0;
    else
      free_coords.push_back(k);
  }
  const int m = static_cast<int>(free_coords.size());
  if (m == 0 || metric.norm(y) < 1e-8) return std::nullopt;
  y = metric.normalized(y);

  auto stacked_residual = [&](const Vec& p) {
    Vec r(n + 1);
    const Vec f = eval_system(alg, metric, p);
    for (int i = 0; i < n; ++i) r[i] = f[i];
    r[n] = metric.ip(p, p) - 1.0;
    return r;
  };

  double best = euclidean_norm(stacked_residual(y));
  for (int iter = 0; iter < max_iters; ++iter) {
    const Vec r = stacked_residual(y);
    const Mat jf = eval_jacobian(alg, metric, y);
    const Vec gy = metric.gram() * y;
    Mat j(n + 1, m);
    for (int col = 0; col < m; ++col) {
      for (int i = 0; i < n; ++i) j(i, col) = jf(i, free_coords[col]);
      j(n, col) = 2.0 * gy[free_coords[col]];
    }
    // Gauss-Newton step via the normal equations, lightly regularized
    const Mat jtj = j.transpose() * j;
    Mat lhs = jtj;
    const double reg = 1e-14 * (1.0 + jtj.max_abs());
    for (int k = 0; k < m; ++k) lhs(k, k) += reg;
    Vec rhs(m, 0.0);
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < n + 1; ++i) rhs[k] -= j(i, k) * r[i];
    const auto step = solve_square(lhs, rhs);
    if (!step.has_value()) break;
    double alpha = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 20 && !accepted; ++halving) {
      Vec y_try = y;
      for (int k = 0; k < m; ++k) y_try[free_coords[k]] += alpha * (*step)[k];
      if (metric.norm(y_try) > 1e-8) {
        const double r_try = euclidean_norm(stacked_residual(y_try));
        if (r_try < best) {
          y = y_try;
          best = r_try;
          accepted = true;
        }
      }
      alpha *= 0.5;
    }
    if (!accepted) break;
  }
  y = metric.normalized(y);
  if (geodesic_residual(alg, metric, y) > tol) return std::nullopt;
  return y;
}

}  // namespace liegeo
