#pragma once

#include <vector>

#include "liegeo/linalg.hpp"

namespace liegeo {

struct PlaneRotation {
  int i = 0;
  int j = 0;
  double angle = 0.0;
};

struct OrthogonalConjugation {
  Mat q;                                 // orthogonal; Q A Q^T has zero diagonal
  std::vector<PlaneRotation> rotations;  // the Givens rotations composing q
};

/// Orthogonal Q with diag(Q A Q^T) = 0 for a traceless real matrix A
/// (Parker's zero-diagonal theorem, made constructive).
///
/// One rotation per step: pick the most positive diagonal entry a_ii and the
/// most negative a_jj (ties to the lowest index), rotate the (i, j) plane by
/// the angle whose tangent t solves a_ii + (a_ij + a_ji) t + a_jj t^2 = 0
/// (real because a_ii a_jj < 0), taking the root of smaller magnitude, which
/// zeroes the (i, i) entry. Index i is then frozen and the step repeats on
/// the remaining indices, whose diagonal still sums to zero. At most n-1
/// rotations are ever needed; the final diagonal entry vanishes by trace
/// preservation, which is asserted rather than iterated on.
///
/// Throws on input whose trace exceeds tol::algebra.
OrthogonalConjugation zero_diagonal_conjugation(const Mat& a);

}  // namespace liegeo
