#pragma once

#include <vector>

#include "liegeo/lie_algebra.hpp"
#include "liegeo/linalg.hpp"

namespace liegeo {

/// An inner product on the reference coordinate space, held as its Gram
/// matrix. Construction validates symmetry and positive definiteness (the
/// failure message names the first non-positive Cholesky pivot).
class InnerProduct {
 public:
  explicit InnerProduct(Mat gram);

  static InnerProduct identity(int n) { return InnerProduct(Mat::identity(n)); }

  int dim() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }

  double ip(const Vec& u, const Vec& v) const;
  double norm(const Vec& u) const;
  Vec normalized(const Vec& u) const;

 private:
  Mat gram_;
};

/// Modified Gram-Schmidt under `metric` with one re-orthogonalization pass.
/// Throws on input that is dependent at the rank tolerance.
std::vector<Vec> gram_schmidt(const InnerProduct& metric, const std::vector<Vec>& vectors);

/// Orthonormal basis of { v : <v, s> = 0 for all s in sub }.
Subspace orthogonal_complement(const InnerProduct& metric, const Subspace& sub);

struct CentralQuotient {
  LieAlgebra algebra;   // dimension n-1, on an orthonormal basis of z-perp
  InnerProduct metric;  // identity Gram by construction
  Mat lift;             // n x (n-1): embeds quotient coordinates back into z-perp
};

/// Quotient of `alg` by the central line through the unit vector z, metrized
/// so that the projection restricted to z-perp is an isometry.
CentralQuotient quotient_by_central_line(const LieAlgebra& alg, const InnerProduct& metric,
                                         const Vec& z);

}  // namespace liegeo
