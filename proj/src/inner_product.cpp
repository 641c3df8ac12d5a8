#include "liegeo/inner_product.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "liegeo/tolerances.hpp"

namespace liegeo {

InnerProduct::InnerProduct(Mat gram) : gram_(std::move(gram)) {
  detail::require(gram_.rows() == gram_.cols(), "Gram matrix must be square");
  const double scale = std::max(1.0, gram_.max_abs());
  for (int i = 0; i < gram_.rows(); ++i)
    for (int j = i + 1; j < gram_.cols(); ++j) {
      detail::require(std::fabs(gram_(i, j) - gram_(j, i)) <= 1e-12 * scale,
                      "Gram matrix must be symmetric");
      const double avg = 0.5 * (gram_(i, j) + gram_(j, i));
      gram_(i, j) = gram_(j, i) = avg;
    }
  const CholeskyResult ch = cholesky(gram_);
  if (!ch.positive_definite)
    throw std::invalid_argument("Gram matrix is not positive definite (pivot " +
                                std::to_string(ch.first_bad_pivot) + " is non-positive)");
}

double InnerProduct::ip(const Vec& u, const Vec& v) const {
  detail::require(static_cast<int>(u.size()) == dim() && static_cast<int>(v.size()) == dim(),
                  "inner product arguments have wrong dimension");
  double s = 0.0;
  for (int i = 0; i < dim(); ++i) {
    if (u[i] == 0.0) continue;
    double row = 0.0;
    for (int j = 0; j < dim(); ++j) row += gram_(i, j) * v[j];
    s += u[i] * row;
  }
  return s;
}

double InnerProduct::norm(const Vec& u) const { return std::sqrt(ip(u, u)); }

Vec InnerProduct::normalized(const Vec& u) const {
  const double n = norm(u);
  detail::require(n > 0.0, "cannot normalize the zero vector");
  return scaled(u, 1.0 / n);
}

std::vector<Vec> gram_schmidt(const InnerProduct& metric, const std::vector<Vec>& vectors) {
  std::vector<Vec> out;
  out.reserve(vectors.size());
  double scale = 0.0;
  for (const Vec& v : vectors) scale = std::max(scale, metric.norm(v));
  for (const Vec& v : vectors) {
    Vec u = v;
    // two projection passes ("twice is enough")
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& q : out) u = sub(u, scaled(q, metric.ip(u, q)));
    const double n = metric.norm(u);
    detail::require(n > tol::rank * scale, "gram_schmidt input is linearly dependent");
    out.push_back(scaled(u, 1.0 / n));
  }
  return out;
}

Subspace orthogonal_complement(const InnerProduct& metric, const Subspace& sub) {
  const int n = metric.dim();
  detail::require(sub.ambient_dim() == n, "subspace and metric dimensions differ");
  if (sub.dim() == 0) {
    const std::vector<Vec> q = gram_schmidt(metric, Mat::identity(n).cols_as_vectors());
    return Subspace::span_of(Mat::from_cols(q), n);
  }
  // v is in the complement iff (B^T G) v = 0.
  const Mat constraints = sub.basis().transpose() * metric.gram();
  const Mat k = kernel_basis(constraints, tol::rank);
  if (k.cols() == 0) return Subspace::zero(n);
  const std::vector<Vec> q = gram_schmidt(metric, k.cols_as_vectors());
  return Subspace::span_of(Mat::from_cols(q), n);
}

CentralQuotient quotient_by_central_line(const LieAlgebra& alg, const InnerProduct& metric,
                                         const Vec& z) {
  const int n = alg.dim();
  detail::require(n >= 1, "cannot quotient a zero-dimensional algebra");
  detail::require(std::fabs(metric.ip(z, z) - 1.0) <= tol::algebra, "z must have unit length");
  for (int i = 0; i < n; ++i)
    detail::require(euclidean_norm(alg.bracket(basis_vector(n, i), z)) <= tol::algebra,
                    "z must be central");

  const Subspace comp = orthogonal_complement(metric, Subspace::span_of(Mat::from_cols({z}), n));
  detail::ensure(comp.dim() == n - 1, "complement of a line must have codimension one");
  const std::vector<Vec> u = comp.basis_vectors();  // orthonormal under metric

  // Quotient structure constants: coordinates of [u_i, u_j] against the
  // orthonormal frame {u_1, ..., u_{n-1}}; the z component is projected away.
  // Coefficients below roundoff of the bracket scale are clamped to zero so
  // that a quotient that is abelian in exact arithmetic comes out abelian.
  std::vector<double> c(static_cast<size_t>(n - 1) * (n - 1) * (n - 1), 0.0);
  auto at = [n](int i, int j, int k) {
    return (static_cast<size_t>(i) * (n - 1) + j) * (n - 1) + k;
  };
  double bracket_scale = 0.0;
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j)
      bracket_scale = std::max(bracket_scale, metric.norm(alg.bracket(u[i], u[j])));
  const double clamp = 1e-12 * bracket_scale;
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) {
      const Vec b = alg.bracket(u[i], u[j]);
      for (int k = 0; k < n - 1; ++k) {
        double coeff = metric.ip(b, u[k]);
        if (std::fabs(coeff) <= clamp) coeff = 0.0;
        c[at(i, j, k)] = coeff;
        c[at(j, i, k)] = -coeff;
      }
    }
  return CentralQuotient{LieAlgebra(n - 1, std::move(c)), InnerProduct::identity(n - 1),
                         Mat::from_cols(u)};
}

}  // namespace liegeo
