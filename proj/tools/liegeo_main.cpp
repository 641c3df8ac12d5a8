// Command line front end: load an algebra + inner product description, run
// the checks and constructions, print a table or a JSON report.
//
// Exit codes: 0 success, 1 parse/validation error, 2 not a Lie algebra,
// 3 no applicable construction.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "liegeo/catalog.hpp"
#include "liegeo/constructions.hpp"
#include "liegeo/geodesic.hpp"
#include "liegeo/problem_file.hpp"
#include "liegeo/sampling.hpp"
#include "liegeo/tolerances.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace liegeo;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotLie = 2;
constexpr int kExitNoConstruction = 3;

json vectors_to_json(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const Vec& v : vs) out.push_back(v);
  return out;
}

void print_vectors(const std::vector<Vec>& vs, const char* label) {
  std::printf("%s:\n", label);
  for (size_t i = 0; i < vs.size(); ++i) {
    std::printf("  [%zu] ", i + 1);
    for (double x : vs[i]) std::printf("% .12g ", x);
    std::printf("\n");
  }
}

struct LoadedProblem {
  ProblemFile file;
  LieAlgebra algebra;
  InnerProduct metric;
};

LoadedProblem load_problem(const std::string& path) {
  ProblemFile pf = load_problem_file(path);
  LieAlgebra alg = [&] {
    try {
      return to_algebra(pf);
    } catch (const std::invalid_argument& e) {
      throw ProblemFileError(std::string("invalid bracket table: ") + e.what());
    }
  }();
  InnerProduct metric = to_metric(pf);
  return LoadedProblem{std::move(pf), std::move(alg), std::move(metric)};
}

json basis_report_json(const BasisReport& rep) {
  json out;
  out["verdict"] = to_string(rep.verdict);
  out["vectors"] = vectors_to_json(rep.vectors);
  out["geodesic_residuals"] = rep.geodesic_residuals;
  out["gram_deviation"] = rep.gram_deviation;
  out["independent"] = rep.independent;
  return out;
}

json certificate_json(const NoBasisCertificate& cert) {
  json out;
  out["conclusion"] = cert.conclusion;
  out["cases12_impossible"] = cert.cases12_impossible;
  out["min_residual_v5"] = cert.min_residual_v5;
  out["min_residual_v4"] = cert.min_residual_v4;
  out["residual_floor"] = cert.residual_floor;
  out["normal_of_derived"] = cert.normal_of_derived;
  out["normal_residual"] = cert.normal_residual;
  out["case5_samples"] = cert.case5_samples;
  out["case5_unique"] = cert.case5_unique;
  out["case4_samples"] = cert.case4_samples;
  out["max_case4_v4_alignment"] = cert.max_case4_v4_alignment;
  out["case4_orthogonal_to_v4"] = cert.case4_orthogonal_to_v4;
  out["case3_samples"] = cert.case3_samples;
  out["case3_image_formula_ok"] = cert.case3_image_formula_ok;
  out["trace_ad_x1_on_v3"] = cert.trace_ad_x1_on_v3;
  out["trace_fact"] = cert.trace_fact;
  return out;
}

void print_certificate(const NoBasisCertificate& cert) {
  std::printf("no-orthonormal-geodesic-basis certificate\n");
  std::printf("  cases (1)-(2) impossible : %s  (min residual V5 %.3e, V4 %.3e, floor %.1e)\n",
              cert.cases12_impossible ? "yes" : "NO", cert.min_residual_v5, cert.min_residual_v4,
              cert.residual_floor);
  std::printf("  case (5) unique normal   : %s  (normal residual %.3e, %d sample(s))\n",
              cert.case5_unique ? "yes" : "NO", cert.normal_residual, cert.case5_samples);
  std::printf("  case (4) orthogonal to V4: %s  (max alignment %.3e, %d sample(s))\n",
              cert.case4_orthogonal_to_v4 ? "yes" : "NO", cert.max_case4_v4_alignment,
              cert.case4_samples);
  std::printf("  case (3) image formula   : %s  (%d sample(s))\n",
              cert.case3_image_formula_ok ? "yes" : "NO", cert.case3_samples);
  std::printf("  trace of ad(X1)|V3       : %.15g (expected -3): %s\n", cert.trace_ad_x1_on_v3,
              cert.trace_fact ? "yes" : "NO");
  std::printf("  conclusion               : %s\n",
              cert.conclusion ? "no orthonormal geodesic basis" : "INCONCLUSIVE");
}

int cmd_check(const std::string& path, bool as_json) {
  const LoadedProblem p = load_problem(path);
  const double jres = p.algebra.jacobi_residual();
  const bool is_lie = jres <= tol::algebra;
  json out;
  out["command"] = "check";
  out["name"] = p.file.name;
  out["dim"] = p.file.dim;
  out["jacobi_residual"] = jres;
  out["is_lie_algebra"] = is_lie;
  if (is_lie) {
    out["unimodular"] = p.algebra.is_unimodular();
    out["solvable"] = p.algebra.is_solvable();
    out["nilpotent"] = p.algebra.is_nilpotent();
    out["derived_dim"] = p.algebra.derived_algebra().dim();
    out["center_dim"] = p.algebra.center().dim();
  }
  if (as_json) {
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("name            : %s\n", p.file.name.empty() ? "(unnamed)" : p.file.name.c_str());
    std::printf("dim             : %d\n", p.file.dim);
    std::printf("jacobi residual : %.3e (%s)\n", jres, is_lie ? "Lie algebra" : "NOT a Lie algebra");
    if (is_lie) {
      std::printf("unimodular      : %s\n", p.algebra.is_unimodular() ? "yes" : "no");
      std::printf("solvable        : %s\n", p.algebra.is_solvable() ? "yes" : "no");
      std::printf("nilpotent       : %s\n", p.algebra.is_nilpotent() ? "yes" : "no");
      std::printf("dim g'          : %d\n", p.algebra.derived_algebra().dim());
      std::printf("center dim      : %d\n", p.algebra.center().dim());
    }
  }
  return is_lie ? kExitOk : kExitNotLie;
}

int cmd_basis(const std::string& path, bool as_json) {
  const LoadedProblem p = load_problem(path);
  if (p.algebra.jacobi_residual() > tol::algebra) {
    std::fprintf(stderr, "error: the bracket table violates the Jacobi identity\n");
    return kExitNotLie;
  }
  const int n = p.algebra.dim();
  std::string construction;
  std::optional<BasisReport> rep;
  json extra;

  if (p.algebra.is_nilpotent()) {
    construction = "nilpotent";
    rep = nilpotent_geodesic_basis(p.algebra, p.metric);
  } else if (n == 3 && p.algebra.is_unimodular()) {
    construction = "milnor_dim3";
    const MilnorForm form = milnor_basis_dim3(p.algebra, p.metric);
    rep = verify_basis(p.algebra, p.metric, form.basis);
    extra["milnor_lambdas"] = std::vector<double>(form.lambdas.begin(), form.lambdas.end());
  } else if (n == 4 && p.algebra.is_unimodular()) {
    const Dim4BasisResult res = dim4_geodesic_basis(p.algebra, p.metric);
    construction = std::string("dim4/") + to_string(res.tag);
    rep = res.report;
    if (res.heisenberg_branch) {
      extra["heisenberg_check"] = {{"a_plus_d", res.heisenberg_a_plus_d},
                                   {"g", res.heisenberg_g}};
    }
  } else if (p.algebra.is_unimodular()) {
    const auto ideal = find_codim1_abelian_ideal(p.algebra);
    if (ideal.has_value()) {
      construction = "codim1_abelian";
      rep = codim1_abelian_geodesic_basis(p.algebra, p.metric, *ideal);
    }
  }

  if (!rep.has_value()) {
    std::fprintf(stderr,
                 "error: no implemented construction applies (the algebra is neither nilpotent, "
                 "nor unimodular of dimension <= 4, nor does it have a codimension-one abelian "
                 "ideal)\n");
    return kExitNoConstruction;
  }

  json out;
  out["command"] = "basis";
  out["name"] = p.file.name;
  out["construction"] = construction;
  out.update(basis_report_json(*rep));
  for (auto& [k, v] : extra.items()) out[k] = v;
  if (as_json) {
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("construction : %s\n", construction.c_str());
    std::printf("verdict      : %s\n", to_string(rep->verdict).c_str());
    print_vectors(rep->vectors, "basis vectors");
    std::printf("residuals    :");
    for (double r : rep->geodesic_residuals) std::printf(" %.3e", r);
    std::printf("\ngram deviation: %.3e\n", rep->gram_deviation);
  }
  return rep->verdict == BasisVerdict::orthonormal_geodesic ? kExitOk : kExitNoConstruction;
}

int cmd_geodesics(const std::string& path, int starts, std::uint64_t seed, bool as_json) {
  const LoadedProblem p = load_problem(path);
  if (p.algebra.jacobi_residual() > tol::algebra) {
    std::fprintf(stderr, "error: the bracket table violates the Jacobi identity\n");
    return kExitNotLie;
  }
  GeodesicSearchConfig cfg;
  cfg.n_starts = starts;
  cfg.seed = seed;
  const GeodesicSearchResult res = find_geodesics(p.algebra, p.metric, cfg);
  const int span = res.vectors.empty()
                       ? 0
                       : rank(Mat::from_cols(res.vectors), tol::rank);
  std::vector<double> residuals;
  residuals.reserve(res.vectors.size());
  for (const Vec& y : res.vectors)
    residuals.push_back(geodesic_residual(p.algebra, p.metric, y));

  if (as_json) {
    json out;
    out["command"] = "geodesics";
    out["name"] = p.file.name;
    out["starts"] = starts;
    out["seed"] = seed;
    out["converged_starts"] = res.converged_starts;
    out["failed_starts"] = res.failed_starts;
    out["vectors"] = vectors_to_json(res.vectors);
    out["residuals"] = residuals;
    out["span_rank"] = span;
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("starts: %d (converged %d, failed %d), distinct geodesics: %zu\n", starts,
                res.converged_starts, res.failed_starts, res.vectors.size());
    print_vectors(res.vectors, "unit geodesic vectors (up to sign)");
    std::printf("residuals :");
    for (double r : residuals) std::printf(" %.3e", r);
    std::printf("\nspan rank : %d\n", span);
  }
  return kExitOk;
}

Mat parse_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFileError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ProblemFileError(std::string("invalid JSON: ") + e.what());
  }
  const json* g = nullptr;
  if (j.is_array())
    g = &j;
  else if (j.is_object() && j.contains("gram"))
    g = &j["gram"];
  else
    throw ProblemFileError("expected a 5x5 array or an object with a 'gram' field");
  if (!g->is_array() || g->size() != 5) throw ProblemFileError("gram must be 5x5");
  Mat m(5, 5);
  for (int r = 0; r < 5; ++r) {
    if (!(*g)[r].is_array() || (*g)[r].size() != 5) throw ProblemFileError("gram must be 5x5");
    for (int c = 0; c < 5; ++c) {
      if (!(*g)[r][c].is_number()) throw ProblemFileError("gram entries must be numbers");
      m(r, c) = (*g)[r][c].get<double>();
    }
  }
  return m;
}

int cmd_counterexample(const std::optional<double>& epsilon, const std::string& gram_path,
                       int random_count, std::uint64_t seed, bool as_json) {
  json out;
  out["command"] = "counterexample";
  bool all_ok = true;

  json certs = json::array();
  std::vector<std::pair<std::string, InnerProduct>> metrics;
  if (epsilon.has_value()) {
    metrics.emplace_back("epsilon(" + std::to_string(*epsilon) + ")", spanning_metric(*epsilon));
  } else if (!gram_path.empty()) {
    metrics.emplace_back("file:" + gram_path, InnerProduct(parse_gram_file(gram_path)));
  } else if (random_count > 0) {
    Rng rng(seed);
    for (int i = 0; i < random_count; ++i)
      metrics.emplace_back("random[" + std::to_string(i) + "]",
                           InnerProduct(random_spd_gram(rng, 5)));
  } else {
    metrics.emplace_back("identity", InnerProduct::identity(5));
  }

  for (const auto& [label, metric] : metrics) {
    const NoBasisCertificate cert = certify_no_orthonormal_geodesic_basis(metric, seed);
    all_ok = all_ok && cert.conclusion;
    json c = certificate_json(cert);
    c["metric"] = label;
    certs.push_back(std::move(c));
    if (!as_json) {
      std::printf("--- metric %s ---\n", label.c_str());
      print_certificate(cert);
    }
  }
  out["certificates"] = std::move(certs);

  if (epsilon.has_value()) {
    const QuarticReport q = spanning_quartic(*epsilon);
    const SpanningGeodesics s = spanning_geodesics(*epsilon);
    json qj;
    qj["epsilon"] = q.epsilon;
    qj["coefficients"] = std::vector<double>(q.coefficients.begin(), q.coefficients.end());
    qj["roots"] = q.roots;
    qj["t_plus"] = q.t_plus;
    qj["t_minus"] = q.t_minus;
    out["quartic"] = std::move(qj);
    json sj;
    sj["vectors"] = vectors_to_json(s.vectors);
    sj["residuals"] = s.residuals;
    sj["span_rank"] = s.span_rank;
    out["spanning_geodesics"] = std::move(sj);
    all_ok = all_ok && s.span_rank == 5;
    if (!as_json) {
      std::printf("quartic coefficients (t^4..1): %.12g %.12g %.12g %.12g %.12g\n",
                  q.coefficients[0], q.coefficients[1], q.coefficients[2], q.coefficients[3],
                  q.coefficients[4]);
      std::printf("roots:");
      for (double r : q.roots) std::printf(" %.12g", r);
      std::printf("  (t+ = %.12g, t- = %.12g)\n", q.t_plus, q.t_minus);
      print_vectors(s.vectors, "spanning geodesics Y1, Y2, Y3, Y+, Y-");
      std::printf("spanning residuals:");
      for (double r : s.residuals) std::printf(" %.3e", r);
      std::printf("\nspan rank: %d\n", s.span_rank);
    }
  }

  out["all_conclusions_true"] = all_ok;
  if (as_json) std::printf("%s\n", out.dump(2).c_str());
  return all_ok ? kExitOk : kExitNoConstruction;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthonormal geodesic bases for low-dimensional metric Lie algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report instead of a table");

  std::string check_file;
  auto* check = app.add_subcommand("check", "validate a bracket table and report its invariants");
  check->add_option("file", check_file, "problem file (JSON)")->required();

  std::string basis_file;
  auto* basis =
      app.add_subcommand("basis", "construct an orthonormal geodesic basis when one is known");
  basis->add_option("file", basis_file, "problem file (JSON)")->required();

  std::string geo_file;
  int geo_starts = 200;
  std::uint64_t geo_seed = 0x5EED;
  auto* geo = app.add_subcommand("geodesics", "multistart search for unit geodesic vectors");
  geo->add_option("file", geo_file, "problem file (JSON)")->required();
  geo->add_option("--starts", geo_starts, "number of Newton starts")->check(CLI::PositiveNumber);
  geo->add_option("--seed", geo_seed, "search seed");

  std::optional<double> ce_epsilon;
  std::string ce_gram;
  int ce_random = 0;
  std::uint64_t ce_seed = 0x5EED;
  auto* ce = app.add_subcommand(
      "counterexample", "certify that the 5-dimensional example admits no orthonormal geodesic "
                        "basis under a given inner product");
  auto* opt_eps = ce->add_option("--epsilon", ce_epsilon,
                                 "use the spanning-construction metric with this epsilon in (0,1)");
  auto* opt_gram = ce->add_option("--gram", ce_gram, "JSON file with a 5x5 Gram matrix");
  auto* opt_rand = ce->add_option("--random", ce_random, "number of random SPD metrics to test")
                       ->check(CLI::PositiveNumber);
  ce->add_option("--seed", ce_seed, "seed for random metrics and the certificate sampler");
  opt_eps->excludes(opt_gram)->excludes(opt_rand);
  opt_gram->excludes(opt_rand);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_file, as_json);
    if (basis->parsed()) return cmd_basis(basis_file, as_json);
    if (geo->parsed()) return cmd_geodesics(geo_file, geo_starts, geo_seed, as_json);
    if (ce->parsed()) {
      if (ce_epsilon.has_value() && (*ce_epsilon <= 0.0 || *ce_epsilon >= 1.0)) {
        std::fprintf(stderr, "error: --epsilon must lie strictly between 0 and 1\n");
        return kExitParse;
      }
      return cmd_counterexample(ce_epsilon, ce_gram, ce_random, ce_seed, as_json);
    }
  } catch (const ProblemFileError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
  return kExitParse;
}
