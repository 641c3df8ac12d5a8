#include "liegeo/constructions.hpp"

#include <cmath>
#include <stdexcept>

#include "liegeo/tolerances.hpp"
#include "liegeo/zero_diagonal.hpp"

namespace liegeo {

std::string to_string(Dim4CaseTag tag) {
  switch (tag) {
    case Dim4CaseTag::not_solvable: return "not_solvable";
    case Dim4CaseTag::derived_dim0: return "derived_dim0";
    case Dim4CaseTag::derived_dim1_nilpotent: return "derived_dim1_nilpotent";
    case Dim4CaseTag::derived_dim2: return "derived_dim2";
    case Dim4CaseTag::derived_dim3_abelian: return "derived_dim3_abelian";
    case Dim4CaseTag::derived_dim3_heisenberg: return "derived_dim3_heisenberg";
  }
  return "?";
}

namespace {

// Structure constants of a bracket-closed subspace relative to a frame that
// is orthonormal under `metric`. The closure defect is checked.
LieAlgebra restrict_to_frame(const LieAlgebra& alg, const InnerProduct& metric,
                             const std::vector<Vec>& frame) {
  const int k = static_cast<int>(frame.size());
  std::vector<double> c(static_cast<size_t>(k) * k * k, 0.0);
  auto at = [k](int i, int j, int m) { return (static_cast<size_t>(i) * k + j) * k + m; };
  double bracket_scale = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      bracket_scale = std::max(bracket_scale, metric.norm(alg.bracket(frame[i], frame[j])));
  const double clamp = 1e-12 * bracket_scale;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Vec b = alg.bracket(frame[i], frame[j]);
      Vec recon(alg.dim(), 0.0);
      for (int m = 0; m < k; ++m) {
        double coeff = metric.ip(b, frame[m]);
        if (std::fabs(coeff) <= clamp) coeff = 0.0;
        c[at(i, j, m)] = coeff;
        c[at(j, i, m)] = -coeff;
        recon = add(recon, scaled(frame[m], coeff));
      }
      detail::ensure(euclidean_norm(sub(b, recon)) <= 1e-8 * (1.0 + euclidean_norm(b)),
                     "subspace is not closed under the bracket");
    }
  return LieAlgebra(k, std::move(c));
}

Vec lift_through_frame(const std::vector<Vec>& frame, const Vec& coords, int ambient) {
  Vec out(ambient, 0.0);
  for (size_t m = 0; m < frame.size(); ++m) out = add(out, scaled(frame[m], coords[m]));
  return out;
}

std::vector<Vec> nilpotent_basis_recursive(const LieAlgebra& alg, const InnerProduct& metric) {
  const int n = alg.dim();
  if (n == 0) return {};
  if (n == 1) return {metric.normalized(basis_vector(1, 0))};
  const Subspace z_space = alg.center();
  detail::ensure(z_space.dim() >= 1, "nilpotent algebra must have nonzero centre");
  const Vec z = metric.normalized(z_space.basis().col(0));
  const CentralQuotient q = quotient_by_central_line(alg, metric, z);
  const std::vector<Vec> sub_basis = nilpotent_basis_recursive(q.algebra, q.metric);
  std::vector<Vec> out;
  out.reserve(n);
  for (const Vec& v : sub_basis) out.push_back(q.lift * v);
  out.push_back(z);
  return out;
}

}  // namespace

BasisReport nilpotent_geodesic_basis(const LieAlgebra& alg, const InnerProduct& metric) {
  detail::require(alg.dim() == metric.dim(), "algebra and metric dimensions differ");
  detail::require(alg.is_nilpotent(), "nilpotent_geodesic_basis needs a nilpotent algebra");
  return verify_basis(alg, metric, nilpotent_basis_recursive(alg, metric));
}

BasisReport codim1_abelian_geodesic_basis(const LieAlgebra& alg, const InnerProduct& metric,
                                          const Subspace& ideal) {
  const int n = alg.dim();
  detail::require(n == metric.dim() && ideal.ambient_dim() == n,
                  "algebra, metric and ideal dimensions differ");
  detail::require(n >= 1, "need a positive dimension");
  detail::require(alg.is_unimodular(), "codim-1 construction needs a unimodular algebra");
  detail::require(ideal.dim() == n - 1, "ideal must have codimension one");

  const std::vector<Vec> h = gram_schmidt(metric, ideal.basis_vectors());
  for (size_t p = 0; p < h.size(); ++p)
    for (size_t q = p + 1; q < h.size(); ++q)
      detail::require(euclidean_norm(alg.bracket(h[p], h[q])) <= tol::algebra,
                      "ideal must be abelian");
  for (int i = 0; i < n; ++i)
    for (const Vec& hv : h)
      detail::require(ideal.contains(alg.bracket(basis_vector(n, i), hv)),
                      "subspace must be an ideal");

  const Subspace normal = orthogonal_complement(metric, ideal);
  detail::ensure(normal.dim() == 1, "codimension-one ideal must have a one-dimensional normal");
  const Vec x = metric.normalized(normal.basis().col(0));

  // restriction of ad(x) to the ideal, in the orthonormal frame h
  Mat a(n - 1, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    const Vec b = alg.bracket(x, h[j]);
    for (int i = 0; i < n - 1; ++i) a(i, j) = metric.ip(b, h[i]);
  }
  const OrthogonalConjugation conj = zero_diagonal_conjugation(a);

  std::vector<Vec> basis;
  basis.reserve(n);
  basis.push_back(x);
  for (int i = 0; i < n - 1; ++i) {
    Vec y(n, 0.0);
    for (int j = 0; j < n - 1; ++j) y = add(y, scaled(h[j], conj.q(i, j)));
    basis.push_back(y);
  }
  return verify_basis(alg, metric, basis);
}

MilnorForm milnor_basis_dim3(const LieAlgebra& alg, const InnerProduct& metric) {
  detail::require(alg.dim() == 3 && metric.dim() == 3, "Milnor construction is 3-dimensional");
  detail::require(alg.is_unimodular(), "Milnor construction needs a unimodular algebra");

  // Orthonormal frame; the cross product is fixed by declaring it
  // right-handed, so in frame coordinates it is the standard one.
  const std::vector<Vec> u = gram_schmidt(metric, Mat::identity(3).cols_as_vectors());

  Mat ell(3, 3);
  for (int k = 0; k < 3; ++k) {
    const Vec b = alg.bracket(u[(k + 1) % 3], u[(k + 2) % 3]);
    for (int m = 0; m < 3; ++m) ell(m, k) = metric.ip(b, u[m]);
  }
  const double asym = (ell - ell.transpose()).max_abs();
  detail::require(asym <= 1e-8, "the cross-product map is not symmetric (algebra not unimodular)");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double avg = 0.5 * (ell(i, j) + ell(j, i));
      ell(i, j) = ell(j, i) = avg;
    }

  const EigenSym eig = jacobi_eigen_sym(ell);
  MilnorForm form;
  form.basis.reserve(3);
  for (int k = 0; k < 3; ++k) form.basis.push_back(lift_through_frame(u, eig.vectors.col(k), 3));
  for (int k = 0; k < 3; ++k) {
    const Vec b = alg.bracket(form.basis[(k + 1) % 3], form.basis[(k + 2) % 3]);
    form.lambdas[k] = metric.ip(b, form.basis[k]);
    detail::ensure(euclidean_norm(sub(b, scaled(form.basis[k], form.lambdas[k]))) <= 1e-9,
                   "Milnor bracket relations failed");
  }
  return form;
}

Dim4CaseTag classify_dim4(const LieAlgebra& alg) {
  detail::require(alg.dim() == 4, "classification is for dimension 4");
  detail::require(alg.is_unimodular(), "classification is for unimodular algebras");
  if (!alg.is_solvable()) return Dim4CaseTag::not_solvable;
  const Subspace d = alg.derived_algebra();
  switch (d.dim()) {
    case 0: return Dim4CaseTag::derived_dim0;
    case 1: return Dim4CaseTag::derived_dim1_nilpotent;
    case 2: return Dim4CaseTag::derived_dim2;
    case 3: break;
    default:
      detail::ensure(false, "solvable algebra cannot equal its derived algebra");
  }
  const Subspace dd = bracket_span(alg, d, d);
  return dd.dim() == 0 ? Dim4CaseTag::derived_dim3_abelian : Dim4CaseTag::derived_dim3_heisenberg;
}

Dim4BasisResult dim4_geodesic_basis(const LieAlgebra& alg, const InnerProduct& metric) {
  detail::require(alg.dim() == 4 && metric.dim() == 4, "construction is 4-dimensional");
  detail::require(alg.jacobi_residual() <= tol::algebra, "structure constants violate Jacobi");
  Dim4BasisResult res;
  res.tag = classify_dim4(alg);

  switch (res.tag) {
    case Dim4CaseTag::not_solvable: {
      const Subspace h = alg.derived_algebra();
      detail::ensure(h.dim() == 3, "non-solvable unimodular dim-4 algebra must have g' of dim 3");
      const Subspace comp = orthogonal_complement(metric, h);
      detail::ensure(comp.dim() == 1, "normal line missing");
      const Vec w = metric.normalized(comp.basis().col(0));
      const std::vector<Vec> hb = gram_schmidt(metric, h.basis_vectors());
      const LieAlgebra restricted = restrict_to_frame(alg, metric, hb);
      const MilnorForm mil = milnor_basis_dim3(restricted, InnerProduct::identity(3));
      std::vector<Vec> basis;
      for (const Vec& y : mil.basis) basis.push_back(lift_through_frame(hb, y, 4));
      basis.push_back(w);
      res.report = verify_basis(alg, metric, basis);
      break;
    }
    case Dim4CaseTag::derived_dim0:
    case Dim4CaseTag::derived_dim1_nilpotent: {
      detail::ensure(alg.is_nilpotent(), "g' central of dim <= 1 forces nilpotency");
      res.report = nilpotent_geodesic_basis(alg, metric);
      break;
    }
    case Dim4CaseTag::derived_dim2: {
      res.dim2_branch = true;
      const Subspace d = alg.derived_algebra();
      const std::vector<Vec> f = gram_schmidt(metric, d.basis_vectors());
      const Subspace comp = orthogonal_complement(metric, d);
      detail::ensure(comp.dim() == 2, "complement of g' must be 2-dimensional");
      const Vec cx = comp.basis().col(0);
      const Vec cy = comp.basis().col(1);
      auto restricted_action = [&](const Vec& v) {
        Mat m(2, 2);
        for (int j = 0; j < 2; ++j) {
          const Vec b = alg.bracket(v, f[j]);
          for (int i = 0; i < 2; ++i) m(i, j) = metric.ip(b, f[i]);
        }
        return m;
      };
      const Mat mx = restricted_action(cx);
      const Mat my = restricted_action(cy);
      detail::ensure((mx * my - my * mx).max_abs() <= 1e-8,
                     "restricted actions of the complement must commute");
      // The commuting traceless pair is linearly dependent; the combination
      // that kills the action is the null vector of the 2x2 Frobenius Gram.
      auto frob = [](const Mat& a, const Mat& b) {
        double s = 0.0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) s += a(i, j) * b(i, j);
        return s;
      };
      Mat gramf(2, 2);
      gramf(0, 0) = frob(mx, mx);
      gramf(0, 1) = gramf(1, 0) = frob(mx, my);
      gramf(1, 1) = frob(my, my);
      const EigenSym eig = jacobi_eigen_sym(gramf);
      const double alpha = eig.vectors(0, 0);
      const double beta = eig.vectors(1, 0);
      const Vec yhat = add(scaled(cx, alpha), scaled(cy, beta));
      Mat killed(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) killed(i, j) = alpha * mx(i, j) + beta * my(i, j);
      res.dim2_rotated_action_max = killed.max_abs();
      detail::ensure(res.dim2_rotated_action_max <= 1e-9,
                     "rotated complement vector must act trivially on g'");
      Mat ideal_cols(4, 3);
      ideal_cols.set_col(0, f[0]);
      ideal_cols.set_col(1, f[1]);
      ideal_cols.set_col(2, yhat);
      const Subspace ideal = Subspace::span_of(ideal_cols, 4);
      detail::ensure(ideal.dim() == 3, "span(Y, g') must have dimension 3");
      res.report = codim1_abelian_geodesic_basis(alg, metric, ideal);
      break;
    }
    case Dim4CaseTag::derived_dim3_abelian: {
      res.report = codim1_abelian_geodesic_basis(alg, metric, alg.derived_algebra());
      break;
    }
    case Dim4CaseTag::derived_dim3_heisenberg: {
      res.heisenberg_branch = true;
      const Subspace d = alg.derived_algebra();
      const std::vector<Vec> db = gram_schmidt(metric, d.basis_vectors());
      const LieAlgebra restricted = restrict_to_frame(alg, metric, db);
      const Subspace zc = restricted.center();
      detail::ensure(zc.dim() == 1, "Heisenberg algebra has a one-dimensional centre");
      Vec z_coords = zc.basis().col(0);
      z_coords = scaled(z_coords, 1.0 / euclidean_norm(z_coords));
      const Vec z = lift_through_frame(db, z_coords, 4);
      const Subspace xy_plane = orthogonal_complement(
          InnerProduct::identity(3), Subspace::span_of(Mat::from_cols({z_coords}), 3));
      detail::ensure(xy_plane.dim() == 2, "centre complement inside g' must be a plane");
      const Vec x = lift_through_frame(db, xy_plane.basis().col(0), 4);
      const Vec y = lift_through_frame(db, xy_plane.basis().col(1), 4);
      const double lambda = metric.ip(alg.bracket(x, y), z);
      detail::ensure(std::fabs(lambda) > tol::algebra, "[X, Y] must be a nonzero multiple of Z");
      detail::ensure(
          euclidean_norm(sub(alg.bracket(x, y), scaled(z, lambda))) <= 1e-8 * std::fabs(lambda),
          "[X, Y] must lie on the centre line");

      const Subspace comp = orthogonal_complement(metric, d);
      detail::ensure(comp.dim() == 1, "normal line missing");
      const Vec w = metric.normalized(comp.basis().col(0));

      const Vec frame[3] = {x, y, z};
      Mat a(3, 3);
      for (int j = 0; j < 3; ++j) {
        const Vec b = alg.bracket(w, frame[j]);
        for (int i = 0; i < 3; ++i) a(i, j) = metric.ip(b, frame[i]);
      }
      // the centre of g' is characteristic, so ad(W) preserves it
      detail::ensure(std::fabs(a(0, 2)) <= 1e-8 && std::fabs(a(1, 2)) <= 1e-8,
                     "ad(W) must preserve the centre of g'");
      res.heisenberg_a_plus_d = a(0, 0) + a(1, 1);
      res.heisenberg_g = a(2, 2);
      detail::ensure(std::fabs(res.heisenberg_a_plus_d - res.heisenberg_g) <= 1e-8 &&
                         std::fabs(res.heisenberg_a_plus_d + res.heisenberg_g) <= 1e-8,
                     "Jacobi-forced identities a+d = g and a+d+g = 0 failed");

      Mat block(2, 2);
      block(0, 0) = a(0, 0);
      block(0, 1) = a(0, 1);
      block(1, 0) = a(1, 0);
      block(1, 1) = a(1, 1);
      const OrthogonalConjugation conj = zero_diagonal_conjugation(block);
      const Vec xp = add(scaled(x, conj.q(0, 0)), scaled(y, conj.q(0, 1)));
      const Vec yp = add(scaled(x, conj.q(1, 0)), scaled(y, conj.q(1, 1)));
      res.report = verify_basis(alg, metric, {w, xp, yp, z});
      break;
    }
  }
  detail::ensure(res.report.verdict == BasisVerdict::orthonormal_geodesic,
                 "dimension-4 construction must produce an orthonormal geodesic basis");
  return res;
}

std::optional<Subspace> find_codim1_abelian_ideal(const LieAlgebra& alg) {
  const int n = alg.dim();
  if (n == 0) return std::nullopt;
  const Subspace d = alg.derived_algebra();
  if (d.dim() == n) return std::nullopt;

  const InnerProduct euclid = InnerProduct::identity(n);
  auto is_abelian_ideal = [&](const Subspace& h) {
    if (h.dim() != n - 1) return false;
    std::vector<Vec> hb;
    try {
      hb = gram_schmidt(euclid, h.basis_vectors());
    } catch (const std::invalid_argument&) {
      return false;
    }
    for (size_t p = 0; p < hb.size(); ++p)
      for (size_t q = p + 1; q < hb.size(); ++q)
        if (euclidean_norm(alg.bracket(hb[p], hb[q])) > tol::algebra) return false;
    for (int i = 0; i < n; ++i)
      for (const Vec& hv : hb)
        if (!h.contains(alg.bracket(basis_vector(n, i), hv))) return false;
    return true;
  };

  if (d.dim() == n - 1) {
    if (is_abelian_ideal(d)) return d;
    return std::nullopt;
  }

  // Any codimension-one ideal contains g', so candidates are the hyperplanes
  // H = g' + (hyperplane of a complement), parametrized by a normal direction
  // nu in the complement; nu runs over a small integer net.
  Mat extend(n, d.dim() + n);
  for (int j = 0; j < d.dim(); ++j) extend.set_col(j, d.basis().col(j));
  for (int j = 0; j < n; ++j) extend.set_col(d.dim() + j, basis_vector(n, j));
  const Mat completed = column_space_basis(extend, tol::rank);
  std::vector<Vec> w;
  for (int j = d.dim(); j < n; ++j) w.push_back(completed.col(j));
  const int q = static_cast<int>(w.size());

  std::vector<int> nu(q, -2);
  for (;;) {
    int first_nonzero = -1;
    for (int i = 0; i < q; ++i)
      if (nu[i] != 0) {
        first_nonzero = i;
        break;
      }
    if (first_nonzero >= 0 && nu[first_nonzero] > 0) {
      Mat nu_row(1, q);
      for (int i = 0; i < q; ++i) nu_row(0, i) = nu[i];
      const Mat k = kernel_basis(nu_row, tol::rank);
      Mat cols(n, d.dim() + k.cols());
      for (int j = 0; j < d.dim(); ++j) cols.set_col(j, d.basis().col(j));
      for (int j = 0; j < k.cols(); ++j) {
        Vec v(n, 0.0);
        for (int m = 0; m < q; ++m) v = add(v, scaled(w[m], k(m, j)));
        cols.set_col(d.dim() + j, v);
      }
      const Subspace h = Subspace::span_of(cols, n);
      if (is_abelian_ideal(h)) return h;
    }
    // advance the net counter
    int pos = q - 1;
    while (pos >= 0 && nu[pos] == 2) {
      nu[pos] = -2;
      --pos;
    }
    if (pos < 0) break;
    ++nu[pos];
  }
  return std::nullopt;
}

}  // namespace liegeo
