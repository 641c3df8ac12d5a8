#include "liegeo/lie_algebra.hpp"

#include <cmath>
#include <string>

namespace liegeo {

Subspace Subspace::span_of(const Mat& columns, int ambient_dim, double tol_rel) {
  if (columns.cols() == 0) return zero(ambient_dim);
  detail::require(columns.rows() == ambient_dim, "spanning columns have wrong ambient dimension");
  return Subspace(column_space_basis(columns, tol_rel), ambient_dim);
}

bool Subspace::contains(const Vec& v, double tol_rel) const {
  detail::require(static_cast<int>(v.size()) == ambient_, "vector has wrong ambient dimension");
  Mat aug(ambient_, dim() + 1);
  for (int j = 0; j < dim(); ++j) aug.set_col(j, basis_.col(j));
  aug.set_col(dim(), v);
  return rank(aug, tol_rel) == dim();
}

bool Subspace::contains(const Subspace& other, double tol_rel) const {
  Mat aug(ambient_, dim() + other.dim());
  for (int j = 0; j < dim(); ++j) aug.set_col(j, basis_.col(j));
  for (int j = 0; j < other.dim(); ++j) aug.set_col(dim() + j, other.basis_.col(j));
  return rank(aug, tol_rel) == dim();
}

bool Subspace::same_span(const Subspace& other, double tol_rel) const {
  return dim() == other.dim() && contains(other, tol_rel);
}

LieAlgebra::LieAlgebra(int dim, std::vector<double> structure) : n_(dim), c_(std::move(structure)) {
  detail::require(dim >= 0, "dimension must be nonnegative");
  detail::require(c_.size() == static_cast<size_t>(dim) * dim * dim,
                  "structure tensor must have dim^3 entries");
  for (double x : c_)
    detail::require(std::isfinite(x), "structure constants must be finite");
  // Enforce antisymmetry: average the two orientations, rejecting genuine
  // mismatch. c[i][i][*] must vanish.
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      detail::require(std::fabs(c_[idx(i, i, k)]) <= tol::algebra,
                      "bracket [e_i, e_i] must be zero");
      c_[idx(i, i, k)] = 0.0;
    }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        const double cij = c_[idx(i, j, k)];
        const double cji = c_[idx(j, i, k)];
        if (cij != 0.0 && cji != 0.0)
          detail::require(std::fabs(cij + cji) <= tol::algebra,
                          "structure constants specify both orientations inconsistently");
        const double v = (cji == 0.0) ? cij : (cij == 0.0 ? -cji : 0.5 * (cij - cji));
        c_[idx(i, j, k)] = v;
        c_[idx(j, i, k)] = -v;
      }
}

LieAlgebra LieAlgebra::abelian(int dim) {
  return LieAlgebra(dim, std::vector<double>(static_cast<size_t>(dim) * dim * dim, 0.0));
}

LieAlgebra LieAlgebra::from_relations(int dim, const std::vector<BracketRelation>& relations) {
  std::vector<double> c(static_cast<size_t>(dim) * dim * dim, 0.0);
  auto at = [dim](int i, int j, int k) {
    return (static_cast<size_t>(i) * dim + j) * dim + k;
  };
  for (const auto& rel : relations) {
    detail::require(rel.i >= 0 && rel.i < dim && rel.j >= 0 && rel.j < dim,
                    "bracket index out of range");
    detail::require(rel.i != rel.j, "bracket relation on a repeated index");
    for (const auto& [k, coeff] : rel.coeffs) {
      detail::require(k >= 0 && k < dim, "bracket target index out of range");
      c[at(rel.i, rel.j, k)] = coeff;
      c[at(rel.j, rel.i, k)] = -coeff;
    }
  }
  return LieAlgebra(dim, std::move(c));
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  detail::require(static_cast<int>(u.size()) == n_ && static_cast<int>(v.size()) == n_,
                  "bracket arguments have wrong dimension");
  // evaluate over antisymmetrized pairs so that bracket(u, v) and
  // bracket(v, u) are exact negations of each other
  Vec out(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const double w = u[i] * v[j] - u[j] * v[i];
      if (w == 0.0) continue;
      for (int k = 0; k < n_; ++k) out[k] += w * c_[idx(i, j, k)];
    }
  return out;
}

Mat LieAlgebra::adjoint(const Vec& y) const {
  detail::require(static_cast<int>(y.size()) == n_, "adjoint argument has wrong dimension");
  Mat a(n_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      double s = 0.0;
      for (int i = 0; i < n_; ++i) s += y[i] * c_[idx(i, j, k)];
      a(k, j) = s;
    }
  return a;
}

double LieAlgebra::jacobi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        const Vec ei = basis_vector(n_, i);
        const Vec ej = basis_vector(n_, j);
        const Vec ek = basis_vector(n_, k);
        Vec s = bracket(ei, bracket(ej, ek));
        s = add(s, bracket(ej, bracket(ek, ei)));
        s = add(s, bracket(ek, bracket(ei, ej)));
        worst = std::max(worst, euclidean_norm(s));
      }
  return worst;
}

bool LieAlgebra::is_unimodular() const {
  for (int i = 0; i < n_; ++i) {
    double tr = 0.0;
    for (int j = 0; j < n_; ++j) tr += c_[idx(i, j, j)];
    if (std::fabs(tr) > tol::algebra) return false;
  }
  return true;
}

Subspace LieAlgebra::derived_algebra() const {
  return bracket_span(*this, Subspace::full(n_), Subspace::full(n_));
}

Subspace LieAlgebra::center() const {
  if (n_ == 0) return Subspace::zero(0);
  // Joint kernel of all ad(e_i): stack the adjoint matrices vertically.
  Mat stacked(n_ * n_, n_);
  for (int i = 0; i < n_; ++i) {
    const Mat ad = adjoint(basis_vector(n_, i));
    for (int r = 0; r < n_; ++r)
      for (int cidx = 0; cidx < n_; ++cidx) stacked(i * n_ + r, cidx) = ad(r, cidx);
  }
  const Mat k = kernel_basis(stacked, tol::rank);
  return Subspace::span_of(k, n_);
}

bool LieAlgebra::is_solvable() const {
  Subspace s = Subspace::full(n_);
  for (int iter = 0; iter <= n_; ++iter) {
    if (s.dim() == 0) return true;
    const Subspace next = bracket_span(*this, s, s);
    if (next.dim() == s.dim()) return false;
    s = next;
  }
  return false;
}

bool LieAlgebra::is_nilpotent() const {
  const Subspace whole = Subspace::full(n_);
  Subspace s = whole;
  for (int iter = 0; iter <= n_; ++iter) {
    if (s.dim() == 0) return true;
    const Subspace next = bracket_span(*this, whole, s);
    if (next.dim() == s.dim()) return false;
    s = next;
  }
  return false;
}

Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  const int n = alg.dim();
  std::vector<Vec> cols;
  cols.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (int p = 0; p < a.dim(); ++p)
    for (int q = 0; q < b.dim(); ++q) cols.push_back(alg.bracket(a.basis().col(p), b.basis().col(q)));
  if (cols.empty()) return Subspace::zero(n);
  return Subspace::span_of(Mat::from_cols(cols), n);
}

}  // namespace liegeo
