#include "liegeo/zero_diagonal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "liegeo/tolerances.hpp"

namespace liegeo {

namespace {

// Smaller-magnitude real root of a_jj t^2 + s t + a_ii = 0, assuming
// a_ii * a_jj < 0 so the roots are real with opposite signs. Ties (s = 0)
// resolve to the positive root.
double smaller_tangent_root(double aii, double s, double ajj) {
  if (std::fabs(ajj) < std::numeric_limits<double>::min()) {
    detail::ensure(s != 0.0, "degenerate rotation equation");
    return -aii / s;
  }
  const double disc = s * s - 4.0 * ajj * aii;
  detail::ensure(disc >= 0.0, "rotation equation lost its real roots");
  const double sq = std::sqrt(disc);
  const double qq = (s >= 0.0) ? -0.5 * (s + sq) : -0.5 * (s - sq);
  double t1, t2;
  if (qq != 0.0) {
    t1 = qq / ajj;
    t2 = aii / qq;
  } else {
    t1 = 0.0;
    t2 = 0.0;
  }
  if (std::fabs(t1) < std::fabs(t2)) return t1;
  if (std::fabs(t2) < std::fabs(t1)) return t2;
  return std::max(t1, t2);
}

// B := G B and B := B G^T for the Givens rotation G in the (i, j) plane,
// i.e. conjugate in place.
void apply_rotation(Mat& b, int i, int j, double c, double s) {
  for (int k = 0; k < b.cols(); ++k) {
    const double bi = b(i, k);
    const double bj = b(j, k);
    b(i, k) = c * bi + s * bj;
    b(j, k) = -s * bi + c * bj;
  }
  for (int k = 0; k < b.rows(); ++k) {
    const double bi = b(k, i);
    const double bj = b(k, j);
    b(k, i) = c * bi + s * bj;
    b(k, j) = -s * bi + c * bj;
  }
}

void apply_rotation_left(Mat& q, int i, int j, double c, double s) {
  for (int k = 0; k < q.cols(); ++k) {
    const double qi = q(i, k);
    const double qj = q(j, k);
    q(i, k) = c * qi + s * qj;
    q(j, k) = -s * qi + c * qj;
  }
}

}  // namespace

OrthogonalConjugation zero_diagonal_conjugation(const Mat& a) {
  detail::require(a.rows() == a.cols(), "zero-diagonal conjugation wants a square matrix");
  detail::require(std::fabs(a.trace()) <= tol::algebra,
                  "zero-diagonal conjugation requires zero trace");
  const int n = a.rows();
  OrthogonalConjugation out;
  out.q = Mat::identity(n);
  Mat b = a;
  std::vector<bool> frozen(n, false);

  for (int step = 0; step < (n > 0 ? n - 1 : 0); ++step) {
    int imax = -1, jmin = -1;
    double dmax = 0.0, dmin = 0.0, worst = 0.0;
    for (int k = 0; k < n; ++k) {
      if (frozen[k]) continue;
      const double d = b(k, k);
      worst = std::max(worst, std::fabs(d));
      if (imax < 0 || d > dmax) {
        dmax = d;
        imax = k;
      }
      if (jmin < 0 || d < dmin) {
        dmin = d;
        jmin = k;
      }
    }
    if (worst <= tol::zero_diag) break;
    detail::ensure(dmax > 0.0 && dmin < 0.0,
                   "active diagonal must straddle zero while its trace vanishes");
    const double s_off = b(imax, jmin) + b(jmin, imax);
    const double t = smaller_tangent_root(dmax, s_off, dmin);
    const double angle = std::atan(t);
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    apply_rotation(b, imax, jmin, c, s);
    apply_rotation_left(out.q, imax, jmin, c, s);
    out.rotations.push_back(PlaneRotation{imax, jmin, angle});
    b(imax, imax) = 0.0;  // zeroed by construction; clamp roundoff
    frozen[imax] = true;
  }

  for (int k = 0; k < n; ++k)
    detail::ensure(std::fabs(b(k, k)) <= tol::zero_diag,
                   "diagonal failed to vanish after n-1 rotations");
  return out;
}

}  // namespace liegeo
