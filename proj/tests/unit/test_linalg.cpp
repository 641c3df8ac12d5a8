#include <doctest.h>

#include "liegeo/linalg.hpp"
#include "liegeo/sampling.hpp"
#include "liegeo/tolerances.hpp"
#include "test_support.hpp"

using namespace liegeo;

TEST_CASE("rank and kernel of small matrices") {
  Mat a(3, 3);
  a(0, 0) = 1;
  a(1, 1) = 2;
  CHECK(rank(a, tol::rank) == 2);
  const Mat k = kernel_basis(a, tol::rank);
  REQUIRE(k.cols() == 1);
  CHECK(euclidean_norm(a * k.col(0)) == doctest::Approx(0.0).epsilon(1e-14));

  CHECK(rank(Mat::identity(4), tol::rank) == 4);
  CHECK(kernel_basis(Mat::identity(4), tol::rank).cols() == 0);
  CHECK(rank(Mat(3, 3), tol::rank) == 0);
  CHECK(kernel_basis(Mat(3, 3), tol::rank).cols() == 3);
}

TEST_CASE("column space basis picks original columns") {
  Mat a = Mat::from_cols({{3, 0, 0}, {6, 0, 0}, {0, 0, 2}});
  const Mat b = column_space_basis(a, tol::rank);
  REQUIRE(b.cols() == 2);
  CHECK(b(0, 0) == 3.0);
  CHECK(b(2, 1) == 2.0);
}

TEST_CASE("rank agrees with a determinant oracle on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 4);
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
    const double d = testsupport::det_laplace(a);
    if (std::fabs(d) > 1e-6) CHECK(rank(a, tol::rank) == n);
  }
}

TEST_CASE("cholesky flags the first non-positive pivot") {
  Mat g = Mat::identity(3);
  g(2, 2) = -1.0;
  const CholeskyResult r = cholesky(g);
  CHECK_FALSE(r.positive_definite);
  CHECK(r.first_bad_pivot == 2);
  CHECK(cholesky(Mat::identity(5)).positive_definite);
}

TEST_CASE("jacobi eigendecomposition on random symmetric matrices") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.normal();
    const EigenSym eig = jacobi_eigen_sym(a);
    // vectors orthonormal, A v = lambda v, values ascending
    const Mat vtv = eig.vectors.transpose() * eig.vectors;
    CHECK((vtv - Mat::identity(n)).max_abs() < 1e-12);
    for (int k = 0; k < n; ++k) {
      const Vec av = a * eig.vectors.col(k);
      const Vec lv = scaled(eig.vectors.col(k), eig.values[k]);
      CHECK(euclidean_norm(sub(av, lv)) < 1e-10);
      if (k > 0) CHECK(eig.values[k] >= eig.values[k - 1]);
    }
  }
}

TEST_CASE("solve_square recovers solutions and reports singularity") {
  Rng rng(37);
  Mat a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = rng.normal();
  const Vec x_true = {1.0, -2.0, 0.5};
  const auto x = solve_square(a, a * x_true);
  REQUIRE(x.has_value());
  CHECK(euclidean_norm(sub(*x, x_true)) < 1e-10);

  Mat sing(2, 2);
  sing(0, 0) = 1.0;
  sing(1, 0) = 1.0;
  CHECK_FALSE(solve_square(sing, {1.0, 0.0}).has_value());
}
