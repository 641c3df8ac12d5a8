#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/inner_product.hpp"
#include "liegeo/lie_algebra.hpp"

namespace liegeo {

enum class BasisVerdict { orthonormal_geodesic, geodesic_only, fail };

std::string to_string(BasisVerdict v);

struct BasisReport {
  std::vector<Vec> vectors;
  std::vector<double> geodesic_residuals;
  double gram_deviation = 0.0;  // max |<v_i, v_j> - delta_ij|
  bool independent = false;
  BasisVerdict verdict = BasisVerdict::fail;
};

struct GeodesicSearchConfig {
  int n_starts = 200;
  std::uint64_t seed = 0x5EED;
  double newton_tol = 1e-11;
  int max_newton_iters = 50;
  double dedup_angle = 1e-4;  // radians, modulo sign
};

struct GeodesicSearchResult {
  std::vector<Vec> vectors;  // unit length, sign-normalized, deduplicated
  int converged_starts = 0;
  int failed_starts = 0;
};

/// |(<[e_1, y], y>, ..., <[e_n, y], y>)|_2 / <y, y>. Zero exactly when y is a
/// geodesic vector; invariant under rescaling y and under orthogonal changes
/// of the reference basis.
double geodesic_residual(const LieAlgebra& alg, const InnerProduct& metric, const Vec& y);

/// The equivalent formulation: Img(ad y) lies in the orthogonal complement
/// of y. Computed from an orthonormalized image basis.
bool is_geodesic_via_image(const LieAlgebra& alg, const InnerProduct& metric, const Vec& y);

/// Residuals, Gram deviation and verdict for a candidate basis of n vectors.
BasisReport verify_basis(const LieAlgebra& alg, const InnerProduct& metric,
                         const std::vector<Vec>& vectors);

/// Multistart Newton search for unit geodesic vectors: solves
/// F_i(y) = <[e_i, y], y> = 0 on the metric unit sphere via the bordered
/// system F(y) + lambda G y = 0, <y, y> = 1 (lambda vanishes at solutions).
/// Singular Newton steps fall back to a damped gradient step on |F|^2.
/// Deterministic for a fixed config; results deduplicated up to sign.
GeodesicSearchResult find_geodesics(const LieAlgebra& alg, const InnerProduct& metric,
                                    const GeodesicSearchConfig& cfg = {});

/// Rank of the span of find_geodesics output. A lower bound on the dimension
/// of the span of all geodesic vectors.
int geodesic_span_rank(const LieAlgebra& alg, const InnerProduct& metric,
                       const GeodesicSearchConfig& cfg = {});

/// Gauss-Newton polish of an approximate geodesic vector with the masked
/// coordinates pinned to zero. Roots that are singular for the full system
/// are often regular inside a coordinate subspace, so this recovers machine
/// accuracy where the multistart solver stalls at the square root of the
/// residual. Returns the polished unit vector when its residual reaches tol.
std::optional<Vec> refine_geodesic(const LieAlgebra& alg, const InnerProduct& metric, Vec y,
                                   const std::vector<bool>& zero_mask, double tol,
                                   int max_iters = 40);

}  // namespace liegeo
