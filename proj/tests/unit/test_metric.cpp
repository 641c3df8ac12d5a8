#include <doctest.h>

#include <cmath>

#include "liegeo/catalog.hpp"
#include "liegeo/inner_product.hpp"
#include "liegeo/sampling.hpp"
#include "liegeo/zero_diagonal.hpp"
#include "test_support.hpp"

using namespace liegeo;

namespace {
Vec e(int n, int i) { return basis_vector(n, i); }
}  // namespace

TEST_CASE("inner product evaluation") {
  const InnerProduct id5 = InnerProduct::identity(5);
  CHECK(id5.ip(e(5, 0), e(5, 0)) == 1.0);

  const InnerProduct eps_metric = spanning_metric(0.5);
  CHECK(eps_metric.ip(e(5, 3), e(5, 4)) == 0.5);
  const Vec x45 = add(e(5, 3), e(5, 4));
  CHECK(eps_metric.ip(x45, x45) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("SPD validation fails fast with the bad pivot index") {
  Mat g = Mat::identity(3);
  g(1, 1) = -2.0;
  CHECK_THROWS_WITH_AS(InnerProduct{g}, doctest::Contains("pivot 1"), std::invalid_argument);
  Mat asym = Mat::identity(2);
  asym(0, 1) = 0.25;
  CHECK_THROWS_AS(InnerProduct{asym}, std::invalid_argument);
}

TEST_CASE("gram_schmidt basics") {
  const InnerProduct id3 = InnerProduct::identity(3);
  const auto same = gram_schmidt(id3, Mat::identity(3).cols_as_vectors());
  CHECK((Mat::from_cols(same) - Mat::identity(3)).max_abs() == 0.0);

  const auto two = gram_schmidt(id3, {e(3, 0), add(e(3, 0), e(3, 1))});
  CHECK(euclidean_norm(sub(two[0], e(3, 0))) == 0.0);
  CHECK(euclidean_norm(sub(two[1], e(3, 1))) < 1e-15);

  // under the epsilon metric, {X4, X5} orthonormalizes to
  // {X4, (X5 - 0.5 X4)/sqrt(0.75)}
  const InnerProduct eps_metric = spanning_metric(0.5);
  const auto q = gram_schmidt(eps_metric, {e(5, 3), e(5, 4)});
  CHECK(euclidean_norm(sub(q[0], e(5, 3))) == 0.0);
  const Vec expected = scaled(add(e(5, 4), scaled(e(5, 3), -0.5)), 1.0 / std::sqrt(0.75));
  CHECK(euclidean_norm(sub(q[1], expected)) < 1e-14);

  CHECK_THROWS_AS(gram_schmidt(id3, {e(3, 0), scaled(e(3, 0), 2.0)}), std::invalid_argument);
}

TEST_CASE("gram_schmidt produces an identity Gram under random SPD metrics") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);
    const InnerProduct metric{random_spd_gram(rng, n)};
    const int k = 1 + static_cast<int>(rng.next_u64() % n);
    std::vector<Vec> input;
    for (int i = 0; i < k; ++i) input.push_back(random_normal_vector(rng, n));
    std::vector<Vec> q;
    try {
      q = gram_schmidt(metric, input);
    } catch (const std::invalid_argument&) {
      continue;  // dependent draw
    }
    double dev = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        dev = std::max(dev, std::fabs(metric.ip(q[i], q[j]) - (i == j ? 1.0 : 0.0)));
    CHECK(dev < 1e-10);
    // same span
    Mat joint(n, 2 * k);
    for (int i = 0; i < k; ++i) {
      joint.set_col(i, input[i]);
      joint.set_col(k + i, q[i]);
    }
    CHECK(rank(joint, tol::rank) == k);
  }
}

TEST_CASE("orthogonal complement") {
  const InnerProduct id4 = InnerProduct::identity(4);
  const Subspace line = Subspace::span_of(Mat::from_cols({e(4, 0)}), 4);
  const Subspace comp = orthogonal_complement(id4, line);
  CHECK(comp.dim() == 3);
  for (const Vec& b : comp.basis_vectors()) CHECK(std::fabs(b[0]) < 1e-14);

  // example5 with identity Gram: complement of V2 is Span(X1)
  const Subspace v2 = example5_flags()[1];
  const Subspace x1 = orthogonal_complement(InnerProduct::identity(5), v2);
  CHECK(x1.dim() == 1);
  CHECK(x1.contains(e(5, 0)));

  // epsilon metric: complement of Span(X4) contains the X5 - 0.5 X4 direction
  const InnerProduct eps_metric2 = spanning_metric(0.5);
  const Subspace x4 = Subspace::span_of(Mat::from_cols({e(5, 3)}), 5);
  const Subspace comp4 = orthogonal_complement(eps_metric2, x4);
  CHECK(comp4.dim() == 4);
  CHECK(comp4.contains(add(e(5, 4), scaled(e(5, 3), -0.5))));

  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);
    const InnerProduct metric{random_spd_gram(rng, n)};
    const int k = 1 + static_cast<int>(rng.next_u64() % (n - 1));
    std::vector<Vec> cols;
    for (int i = 0; i < k; ++i) cols.push_back(random_normal_vector(rng, n));
    const Subspace sub = Subspace::span_of(Mat::from_cols(cols), n);
    const Subspace oc = orthogonal_complement(metric, sub);
    CHECK(sub.dim() + oc.dim() == n);
    for (const Vec& b : oc.basis_vectors())
      for (const Vec& s : sub.basis_vectors())
        CHECK(std::fabs(metric.ip(b, s)) < 1e-10 * (1.0 + euclidean_norm(s)));
  }
}

TEST_CASE("zero diagonal conjugation on the pinned examples") {
  // diag(1, -1): rotation by pi/4, off-diagonal entries +-1
  Mat a(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = -1.0;
  const OrthogonalConjugation r = zero_diagonal_conjugation(a);
  REQUIRE(r.rotations.size() == 1);
  CHECK(r.rotations[0].angle == doctest::Approx(0.7853981633974483).epsilon(1e-15));
  const Mat conj = r.q * a * r.q.transpose();
  CHECK(std::fabs(conj(0, 0)) < 1e-14);
  CHECK(std::fabs(conj(1, 1)) < 1e-14);
  CHECK(std::fabs(std::fabs(conj(0, 1)) - 1.0) < 1e-14);
  CHECK(std::fabs(std::fabs(conj(1, 0)) - 1.0) < 1e-14);

  // already zero diagonal: identity, no rotations
  Mat z(3, 3);
  z(0, 1) = 2.0;
  z(1, 0) = -1.0;
  const OrthogonalConjugation rz = zero_diagonal_conjugation(z);
  CHECK(rz.rotations.empty());
  CHECK((rz.q - Mat::identity(3)).max_abs() == 0.0);

  // diag(2, -1, -1)
  Mat d3(3, 3);
  d3(0, 0) = 2.0;
  d3(1, 1) = -1.0;
  d3(2, 2) = -1.0;
  const OrthogonalConjugation r3 = zero_diagonal_conjugation(d3);
  const Mat c3 = r3.q * d3 * r3.q.transpose();
  for (int i = 0; i < 3; ++i) CHECK(std::fabs(c3(i, i)) < 1e-10);

  Mat bad = Mat::identity(2);
  CHECK_THROWS_AS(zero_diagonal_conjugation(bad), std::invalid_argument);
}

TEST_CASE("zero diagonal conjugation properties on random traceless matrices") {
  Rng rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 7);
    const Mat a = random_traceless(rng, n);
    const OrthogonalConjugation r = zero_diagonal_conjugation(a);
    CHECK(static_cast<int>(r.rotations.size()) <= n - 1);
    CHECK((r.q * r.q.transpose() - Mat::identity(n)).max_abs() <= 1e-10);
    CHECK(std::fabs(std::fabs(testsupport::det_laplace(r.q)) - 1.0) <= 1e-10);
    const Mat conj = r.q * a * r.q.transpose();
    for (int i = 0; i < n; ++i) CHECK(std::fabs(conj(i, i)) <= 1e-9);
    CHECK(std::fabs(conj.trace() - a.trace()) <= 1e-12);
    // eigenvalue multiset preserved: characteristic polynomial coefficients
    const Vec pa = testsupport::char_poly(a);
    const Vec pc = testsupport::char_poly(conj);
    for (int k = 0; k < n; ++k)
      CHECK(std::fabs(pa[k] - pc[k]) <= 1e-8 * (1.0 + std::fabs(pa[k])));
  }
}
