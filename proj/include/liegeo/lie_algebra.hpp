#pragma once

#include <utility>
#include <vector>

#include "liegeo/linalg.hpp"
#include "liegeo/tolerances.hpp"

namespace liegeo {

/// A linear subspace of the reference coordinate space, carried as a full
/// column rank spanning matrix.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the given columns; dependent columns are dropped at the usual
  /// rank tolerance.
  static Subspace span_of(const Mat& columns, int ambient_dim, double tol_rel = tol::rank);
  static Subspace zero(int ambient_dim) { return Subspace(Mat(ambient_dim, 0), ambient_dim); }
  static Subspace full(int ambient_dim) { return Subspace(Mat::identity(ambient_dim), ambient_dim); }

  int dim() const { return basis_.cols(); }
  int ambient_dim() const { return ambient_; }
  const Mat& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const { return basis_.cols_as_vectors(); }

  bool contains(const Vec& v, double tol_rel = tol::rank) const;
  bool contains(const Subspace& other, double tol_rel = tol::rank) const;
  bool same_span(const Subspace& other, double tol_rel = tol::rank) const;

 private:
  Subspace(Mat basis, int ambient) : basis_(std::move(basis)), ambient_(ambient) {}

  Mat basis_;  // ambient_ x dim
  int ambient_ = 0;
};

/// Bracket table for a single ordered pair, used when assembling an algebra
/// relation by relation.
struct BracketRelation {
  int i = 0;
  int j = 0;
  std::vector<std::pair<int, double>> coeffs;  // (k, coefficient of e_k in [e_i, e_j])
};

/// A real Lie algebra presented by structure constants over a fixed
/// reference basis: [e_i, e_j] = sum_k c(i,j,k) e_k.
///
/// Antisymmetry in (i,j) is enforced at construction; input that specifies
/// both orientations with a mismatch beyond tol::algebra is rejected. The
/// Jacobi identity is *not* enforced here: jacobi_residual() measures it, and
/// callers that require a genuine Lie algebra check it explicitly.
class LieAlgebra {
 public:
  /// From the full rank-3 tensor, laid out c[(i*n + j)*n + k].
  LieAlgebra(int dim, std::vector<double> structure);

  static LieAlgebra abelian(int dim);
  static LieAlgebra from_relations(int dim, const std::vector<BracketRelation>& relations);

  int dim() const { return n_; }
  double structure_constant(int i, int j, int k) const { return c_[idx(i, j, k)]; }

  Vec bracket(const Vec& u, const Vec& v) const;

  /// Matrix of ad(y): column j holds the coordinates of [y, e_j].
  Mat adjoint(const Vec& y) const;

  /// Max over basis triples of |[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]|_2.
  double jacobi_residual() const;

  bool is_unimodular() const;
  Subspace derived_algebra() const;
  Subspace center() const;
  bool is_solvable() const;
  bool is_nilpotent() const;

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  std::vector<double> c_;
};

/// Span of all [u, v] with u from `a` and v from `b`.
Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b);

}  // namespace liegeo
