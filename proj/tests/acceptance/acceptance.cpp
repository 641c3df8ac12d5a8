// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every suite is seeded; the whole battery runs twice and
// the two JSON reports must match byte for byte (criterion 11).

#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "liegeo/catalog.hpp"
#include "liegeo/constructions.hpp"
#include "liegeo/geodesic.hpp"
#include "liegeo/sampling.hpp"
#include "liegeo/tolerances.hpp"
#include "liegeo/zero_diagonal.hpp"
#include "test_support.hpp"

using json = nlohmann::ordered_json;
using namespace liegeo;
using testsupport::char_poly;
using testsupport::exists_mutually_orthogonal_subset;
using testsupport::random_abelian_extension;

namespace {

Vec e(int n, int i) { return basis_vector(n, i); }

// ---- criterion 1: the nilpotent construction on every nilpotent catalog algebra ----
json criterion1() {
  json out;
  int cases = 0, failures = 0;
  double worst_residual = 0.0, worst_gram = 0.0;
  for (const auto& entry : standard_algebras()) {
    if (!entry.algebra.is_nilpotent()) continue;
    const int n = entry.algebra.dim();
    if (n == 0) continue;
    for (int m = 0; m < 100; ++m) {
      Rng rng(Rng::derive(0xA11CE, 1000 * cases + m));
      const InnerProduct metric{random_spd_gram(rng, n)};
      const BasisReport rep = nilpotent_geodesic_basis(entry.algebra, metric);
      ++cases;
      double res = 0.0;
      for (double r : rep.geodesic_residuals) res = std::max(res, r);
      worst_residual = std::max(worst_residual, res);
      worst_gram = std::max(worst_gram, rep.gram_deviation);
      if (rep.verdict != BasisVerdict::orthonormal_geodesic || res > 1e-8 ||
          rep.gram_deviation > 1e-8)
        ++failures;
    }
  }
  out["cases"] = cases;
  out["failures"] = failures;
  out["worst_residual"] = worst_residual;
  out["worst_gram_deviation"] = worst_gram;
  out["pass"] = failures == 0 && cases >= 400;
  return out;
}

// ---- criterion 2: the codim-1 construction on random unimodular extensions ----
json criterion2() {
  json out;
  int cases = 0, failures = 0;
  double worst_residual = 0.0, worst_gram = 0.0;
  for (int a = 0; a < 50; ++a) {
    Rng rng(Rng::derive(0xBEEF, a));
    const int fiber = 2 + a % 3;
    const LieAlgebra alg = random_abelian_extension(rng, fiber);
    std::vector<Vec> cols;
    for (int i = 0; i < fiber; ++i) cols.push_back(e(fiber + 1, 1 + i));
    const Subspace ideal = Subspace::span_of(Mat::from_cols(cols), fiber + 1);
    for (int m = 0; m < 20; ++m) {
      const InnerProduct metric{random_spd_gram(rng, fiber + 1)};
      const BasisReport rep = codim1_abelian_geodesic_basis(alg, metric, ideal);
      ++cases;
      double res = 0.0;
      for (double r : rep.geodesic_residuals) res = std::max(res, r);
      worst_residual = std::max(worst_residual, res);
      worst_gram = std::max(worst_gram, rep.gram_deviation);
      if (rep.verdict != BasisVerdict::orthonormal_geodesic || res > 1e-8 ||
          rep.gram_deviation > 1e-8)
        ++failures;
    }
  }
  out["cases"] = cases;
  out["failures"] = failures;
  out["worst_residual"] = worst_residual;
  out["worst_gram_deviation"] = worst_gram;
  out["pass"] = failures == 0;
  return out;
}

// ---- criterion 3: zero-diagonal conjugation of 500 random traceless matrices ----
json criterion3() {
  json out;
  int failures = 0;
  double worst_orth = 0.0, worst_diag = 0.0, worst_poly = 0.0;
  Rng rng(0xC0FFEE);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 7);
    const Mat a = random_traceless(rng, n);
    const OrthogonalConjugation r = zero_diagonal_conjugation(a);
    const double orth = (r.q * r.q.transpose() - Mat::identity(n)).max_abs();
    const Mat conj = r.q * a * r.q.transpose();
    double diag = 0.0;
    for (int i = 0; i < n; ++i) diag = std::max(diag, std::fabs(conj(i, i)));
    const Vec pa = char_poly(a);
    const Vec pc = char_poly(conj);
    double poly = 0.0;
    for (int k = 0; k < n; ++k)
      poly = std::max(poly, std::fabs(pa[k] - pc[k]) / (1.0 + std::fabs(pa[k])));
    worst_orth = std::max(worst_orth, orth);
    worst_diag = std::max(worst_diag, diag);
    worst_poly = std::max(worst_poly, poly);
    if (orth > 1e-10 || diag > 1e-9 || poly > 1e-8) ++failures;
  }
  out["cases"] = 500;
  out["failures"] = failures;
  out["worst_orthogonality"] = worst_orth;
  out["worst_diagonal"] = worst_diag;
  out["worst_char_poly_rel"] = worst_poly;
  out["pass"] = failures == 0;
  return out;
}

// ---- criterion 4: the Milnor construction reproduces its relations ----
json criterion4() {
  json out;
  int cases = 0, failures = 0;
  double worst_relation = 0.0, worst_residual = 0.0;
  const std::vector<std::array<double, 3>> families = {
      {1, 1, 1}, {1, 1, -1}, {1, 1, 0}, {1, -1, 0}, {1, 0, 0}, {0, 0, 0}};
  for (size_t f = 0; f < families.size(); ++f) {
    const LieAlgebra alg = milnor_algebra(families[f][0], families[f][1], families[f][2]);
    for (int m = 0; m < 50; ++m) {
      Rng rng(Rng::derive(0xD1CE, 100 * f + m));
      const InnerProduct metric{random_spd_gram(rng, 3)};
      const MilnorForm form = milnor_basis_dim3(alg, metric);
      ++cases;
      bool ok = true;
      for (int k = 0; k < 3; ++k) {
        const Vec b = alg.bracket(form.basis[(k + 1) % 3], form.basis[(k + 2) % 3]);
        const double rel = euclidean_norm(sub(b, scaled(form.basis[k], form.lambdas[k])));
        const double res = geodesic_residual(alg, metric, form.basis[k]);
        worst_relation = std::max(worst_relation, rel);
        worst_residual = std::max(worst_residual, res);
        ok = ok && rel <= 1e-9 && res <= 1e-9;
      }
      if (!ok) ++failures;
    }
  }
  out["cases"] = cases;
  out["failures"] = failures;
  out["worst_relation"] = worst_relation;
  out["worst_residual"] = worst_residual;
  out["pass"] = failures == 0;
  return out;
}

// ---- criterion 5: the dimension-4 dispatcher across all six cases ----
json criterion5() {
  json out;
  int cases = 0, failures = 0;
  double worst_residual = 0.0, worst_gram = 0.0, worst_heis = 0.0;
  std::set<std::string> tags;
  int entry_index = 0;
  for (const auto& entry : standard_algebras()) {
    if (entry.algebra.dim() != 4) continue;
    tags.insert(to_string(classify_dim4(entry.algebra)));
    for (int m = 0; m < 100; ++m) {
      Rng rng(Rng::derive(0xE1E7, 1000 * entry_index + m));
      const InnerProduct metric{random_spd_gram(rng, 4)};
      const Dim4BasisResult res = dim4_geodesic_basis(entry.algebra, metric);
      ++cases;
      double r = 0.0;
      for (double x : res.report.geodesic_residuals) r = std::max(r, x);
      worst_residual = std::max(worst_residual, r);
      worst_gram = std::max(worst_gram, res.report.gram_deviation);
      bool ok = res.report.verdict == BasisVerdict::orthonormal_geodesic && r <= 1e-8 &&
                res.report.gram_deviation <= 1e-8;
      if (res.heisenberg_branch) {
        worst_heis = std::max(
            {worst_heis, std::fabs(res.heisenberg_a_plus_d), std::fabs(res.heisenberg_g)});
        ok = ok && std::fabs(res.heisenberg_a_plus_d) <= 1e-9 &&
             std::fabs(res.heisenberg_g) <= 1e-9;
      }
      if (!ok) ++failures;
    }
    ++entry_index;
  }
  out["cases"] = cases;
  out["failures"] = failures;
  out["tags_covered"] = static_cast<int>(tags.size());
  out["worst_residual"] = worst_residual;
  out["worst_gram_deviation"] = worst_gram;
  out["worst_heisenberg_identity"] = worst_heis;
  out["pass"] = failures == 0 && tags.size() == 6;
  return out;
}

// ---- criterion 6: the trace of ad(X1)|V3 is -3 under every metric ----
json criterion6() {
  json out;
  const LieAlgebra alg = example5();
  int failures = 0;
  double worst = 0.0;
  for (int m = 0; m < 300; ++m) {
    Rng rng(Rng::derive(0xF00D, m));
    const InnerProduct metric{random_spd_gram(rng, 5)};
    // trace through a metric-orthonormal frame of V3, so the metric actually
    // participates in the computation
    const std::vector<Vec> b = gram_schmidt(metric, {e(5, 2), e(5, 3), e(5, 4)});
    double trace = 0.0;
    for (const Vec& v : b) trace += metric.ip(alg.bracket(e(5, 0), v), v);
    const double dev = std::fabs(trace + 3.0);
    worst = std::max(worst, dev);
    if (dev > 1e-12) ++failures;
  }
  out["metrics"] = 300;
  out["failures"] = failures;
  out["worst_deviation"] = worst;
  out["pass"] = failures == 0;
  return out;
}

// ---- criterion 7: the no-basis certificate across the pinned metrics ----
json criterion7() {
  json out;
  std::vector<InnerProduct> metrics;
  metrics.push_back(InnerProduct::identity(5));
  for (double eps : {0.1, 0.25, 0.5, 0.75, 0.9}) metrics.push_back(spanning_metric(eps));
  {
    Rng rng(0xFEED5EED);
    for (int m = 0; m < 300; ++m) metrics.push_back(InnerProduct(random_spd_gram(rng, 5)));
  }
  const LieAlgebra alg = example5();
  int cert_failures = 0, orth_failures = 0;
  for (size_t m = 0; m < metrics.size(); ++m) {
    const NoBasisCertificate cert = certify_no_orthonormal_geodesic_basis(metrics[m]);
    if (!cert.conclusion) ++cert_failures;
    GeodesicSearchConfig cfg;
    cfg.n_starts = 200;
    const GeodesicSearchResult found = find_geodesics(alg, metrics[m], cfg);
    if (exists_mutually_orthogonal_subset(found.vectors, metrics[m], 5, 1e-6)) ++orth_failures;
  }
  out["metrics"] = static_cast<int>(metrics.size());
  out["certificate_failures"] = cert_failures;
  out["orthogonal_quintuple_found"] = orth_failures;
  out["pass"] = cert_failures == 0 && orth_failures == 0;
  return out;
}

// ---- criterion 8: the epsilon = 1/2 spanning construction, to the digit ----
json criterion8() {
  json out;
  const double eps = 0.5;
  const QuarticReport q = spanning_quartic(eps);
  const bool coeffs_exact = q.coefficients[0] == -0.5 && q.coefficients[1] == -2.125 &&
                            q.coefficients[2] == 1.75 && q.coefficients[3] == 4.5 &&
                            q.coefficients[4] == 2.0;
  auto poly = [&](double t) {
    double v = q.coefficients[0];
    for (int i = 1; i < 5; ++i) v = v * t + q.coefficients[i];
    return v;
  };
  const bool roots_ok = q.t_plus > 0.0 && q.t_minus < 0.0 &&
                        std::fabs(poly(q.t_plus)) <= 1e-10 && std::fabs(poly(q.t_minus)) <= 1e-10;

  const SpanningGeodesics s = spanning_geodesics(eps);
  double worst_res = 0.0;
  for (double r : s.residuals) worst_res = std::max(worst_res, r);
  double worst_eq = 0.0;
  for (int idx : {3, 4}) {
    const double a3 = s.vectors[idx][2], a4 = s.vectors[idx][3], a5 = s.vectors[idx][4];
    worst_eq = std::max(worst_eq, std::fabs(4 * a3 * a3 + a4 * a4 - 2 * a5 * a5 - eps * a4 * a5));
    worst_eq = std::max(worst_eq, std::fabs(a3 * (a4 + eps * a5) + a4 * (eps * a4 + a5)));
  }
  out["coefficients_exact"] = coeffs_exact;
  out["t_plus"] = q.t_plus;
  out["t_minus"] = q.t_minus;
  out["roots_ok"] = roots_ok;
  out["worst_vector_residual"] = worst_res;
  out["worst_eq_residual"] = worst_eq;
  out["span_rank"] = s.span_rank;
  out["pass"] =
      coeffs_exact && roots_ok && worst_res <= 1e-9 && worst_eq <= 1e-10 && s.span_rank == 5;
  return out;
}

// ---- criterion 9: with the orthogonal metric the span is exactly X4-perp ----
json criterion9() {
  json out;
  const LieAlgebra alg = example5();
  const InnerProduct id5 = InnerProduct::identity(5);
  GeodesicSearchConfig cfg;
  const GeodesicSearchResult found = find_geodesics(alg, id5, cfg);
  const int span = found.vectors.empty() ? 0 : rank(Mat::from_cols(found.vectors), tol::rank);
  double worst_x4 = 0.0;
  for (const Vec& y : found.vectors) worst_x4 = std::max(worst_x4, std::fabs(y[3]));
  out["found"] = static_cast<int>(found.vectors.size());
  out["span_rank"] = span;
  out["worst_x4_component"] = worst_x4;
  out["pass"] = span == 4 && worst_x4 <= 1e-8 && !found.vectors.empty();
  return out;
}

// ---- criterion 10: the two geodesic formulations agree everywhere ----
json criterion10() {
  json out;
  const auto catalog = standard_algebras();
  int disagreements = 0, cases = 0;
  Rng rng(0xABCDEF);
  while (cases < 1000) {
    const auto& entry = catalog[rng.next_u64() % catalog.size()];
    const int n = entry.algebra.dim();
    if (n == 0) continue;
    const InnerProduct metric{random_spd_gram(rng, n)};
    const Vec y = random_unit_vector(rng, metric);
    const bool by_residual = geodesic_residual(entry.algebra, metric, y) <= 1e-9;
    const bool by_image = is_geodesic_via_image(entry.algebra, metric, y);
    if (by_residual != by_image) ++disagreements;
    ++cases;
  }
  out["cases"] = cases;
  out["disagreements"] = disagreements;
  out["pass"] = disagreements == 0;
  return out;
}

json run_all() {
  json report;
  report["1_nilpotent_bases"] = criterion1();
  report["2_codim1_abelian_bases"] = criterion2();
  report["3_zero_diagonal"] = criterion3();
  report["4_milnor"] = criterion4();
  report["5_dim4"] = criterion5();
  report["6_trace_fact"] = criterion6();
  report["7_certificate"] = criterion7();
  report["8_spanning_reproduction"] = criterion8();
  report["9_orthogonal_span"] = criterion9();
  report["10_predicate_equivalence"] = criterion10();
  return report;
}

const char* const kDescriptions[10] = {
    "Nilpotent construction: catalog algebras x 100 random metrics",
    "Codim-1 abelian construction: 50 random extensions x 20 random metrics",
    "Zero-diagonal conjugation: 500 random traceless matrices",
    "Milnor frames: lambda families x 50 random metrics",
    "Dimension-4 dispatcher: all six cases x 100 random metrics",
    "Trace obstruction: tr(ad(X1)|V3) = -3 across 300 metrics",
    "Counterexample certificate: identity, epsilon family and 300 random metrics",
    "Quartic and spanning basis reproduction at epsilon = 1/2",
    "Orthogonal-metric geodesic span equals X4-perp",
    "Predicate equivalence on 1000 random triples",
};

}  // namespace

int main() {
  const json first = run_all();
  const std::string first_dump = first.dump(2);
  const json second = run_all();
  const bool deterministic = first_dump == second.dump(2);

  bool all_pass = true;
  int index = 0;
  for (const auto& [key, value] : first.items()) {
    const bool pass = value.at("pass").get<bool>();
    all_pass = all_pass && pass;
    std::printf("[%s] %2d. %s\n", pass ? "PASS" : "FAIL", index + 1, kDescriptions[index]);
    ++index;
  }
  all_pass = all_pass && deterministic;
  std::printf("[%s] 11. Determinism: two runs of suites 1-10 give byte-identical reports\n",
              deterministic ? "PASS" : "FAIL");

  std::printf("\n%s\n", first_dump.c_str());
  return all_pass ? 0 : 1;
}
