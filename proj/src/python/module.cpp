#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liegeo/catalog.hpp"
#include "liegeo/constructions.hpp"
#include "liegeo/geodesic.hpp"
#include "liegeo/problem_file.hpp"
#include "liegeo/sampling.hpp"
#include "liegeo/zero_diagonal.hpp"

namespace py = pybind11;
using namespace liegeo;

namespace {

InnerProduct inner_product_from_rows(const std::vector<Vec>& rows) {
  return InnerProduct(Mat::from_rows(rows));
}

LieAlgebra algebra_from_brackets(
    int dim, const std::vector<std::tuple<int, int, std::map<int, double>>>& brackets) {
  std::vector<BracketRelation> rel;
  rel.reserve(brackets.size());
  for (const auto& [i, j, coeffs] : brackets) {
    BracketRelation r;
    r.i = i;
    r.j = j;
    for (const auto& [k, v] : coeffs) r.coeffs.emplace_back(k, v);
    rel.push_back(std::move(r));
  }
  return LieAlgebra::from_relations(dim, rel);
}

}  // namespace

PYBIND11_MODULE(liegeo, m) {
  m.doc() = "orthonormal geodesic bases for low-dimensional metric Lie algebras";

  py::class_<Subspace>(m, "Subspace")
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def("basis_vectors", &Subspace::basis_vectors)
      .def("contains",
           [](const Subspace& s, const Vec& v) { return s.contains(v); });

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def(py::init(&algebra_from_brackets), py::arg("dim"), py::arg("brackets"),
           "Build from 0-based bracket relations [(i, j, {k: coeff}), ...]")
      .def_static("abelian", &LieAlgebra::abelian, py::arg("dim"))
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def("structure_constant", &LieAlgebra::structure_constant)
      .def("bracket", &LieAlgebra::bracket)
      .def("adjoint", [](const LieAlgebra& g, const Vec& y) { return g.adjoint(y).rows_as_vectors(); })
      .def("jacobi_residual", &LieAlgebra::jacobi_residual)
      .def("is_unimodular", &LieAlgebra::is_unimodular)
      .def("is_solvable", &LieAlgebra::is_solvable)
      .def("is_nilpotent", &LieAlgebra::is_nilpotent)
      .def("derived_algebra", &LieAlgebra::derived_algebra)
      .def("center", &LieAlgebra::center);

  py::class_<InnerProduct>(m, "InnerProduct")
      .def(py::init(&inner_product_from_rows), py::arg("gram"),
           "Build from a symmetric SPD matrix (rows)")
      .def_static("identity", &InnerProduct::identity, py::arg("dim"))
      .def_property_readonly("dim", &InnerProduct::dim)
      .def("gram", [](const InnerProduct& ip) { return ip.gram().rows_as_vectors(); })
      .def("ip", &InnerProduct::ip)
      .def("norm", &InnerProduct::norm);

  py::enum_<BasisVerdict>(m, "BasisVerdict")
      .value("orthonormal_geodesic", BasisVerdict::orthonormal_geodesic)
      .value("geodesic_only", BasisVerdict::geodesic_only)
      .value("fail", BasisVerdict::fail);

  py::class_<BasisReport>(m, "BasisReport")
      .def_readonly("vectors", &BasisReport::vectors)
      .def_readonly("geodesic_residuals", &BasisReport::geodesic_residuals)
      .def_readonly("gram_deviation", &BasisReport::gram_deviation)
      .def_readonly("independent", &BasisReport::independent)
      .def_readonly("verdict", &BasisReport::verdict);

  py::class_<GeodesicSearchConfig>(m, "GeodesicSearchConfig")
      .def(py::init<>())
      .def_readwrite("n_starts", &GeodesicSearchConfig::n_starts)
      .def_readwrite("seed", &GeodesicSearchConfig::seed)
      .def_readwrite("newton_tol", &GeodesicSearchConfig::newton_tol)
      .def_readwrite("max_newton_iters", &GeodesicSearchConfig::max_newton_iters)
      .def_readwrite("dedup_angle", &GeodesicSearchConfig::dedup_angle);

  py::class_<GeodesicSearchResult>(m, "GeodesicSearchResult")
      .def_readonly("vectors", &GeodesicSearchResult::vectors)
      .def_readonly("converged_starts", &GeodesicSearchResult::converged_starts)
      .def_readonly("failed_starts", &GeodesicSearchResult::failed_starts);

  m.def("geodesic_residual", &geodesic_residual);
  m.def("is_geodesic_via_image", &is_geodesic_via_image);
  m.def("verify_basis", &verify_basis);
  m.def("find_geodesics", &find_geodesics, py::arg("algebra"), py::arg("metric"),
        py::arg("config") = GeodesicSearchConfig{});
  m.def("geodesic_span_rank", &geodesic_span_rank, py::arg("algebra"), py::arg("metric"),
        py::arg("config") = GeodesicSearchConfig{});

  m.def("zero_diagonal_conjugation", [](const std::vector<Vec>& rows) {
    const OrthogonalConjugation r = zero_diagonal_conjugation(Mat::from_rows(rows));
    return r.q.rows_as_vectors();
  });

  py::class_<MilnorForm>(m, "MilnorForm")
      .def_readonly("basis", &MilnorForm::basis)
      .def_readonly("lambdas", &MilnorForm::lambdas);

  py::enum_<Dim4CaseTag>(m, "Dim4CaseTag")
      .value("not_solvable", Dim4CaseTag::not_solvable)
      .value("derived_dim0", Dim4CaseTag::derived_dim0)
      .value("derived_dim1_nilpotent", Dim4CaseTag::derived_dim1_nilpotent)
      .value("derived_dim2", Dim4CaseTag::derived_dim2)
      .value("derived_dim3_abelian", Dim4CaseTag::derived_dim3_abelian)
      .value("derived_dim3_heisenberg", Dim4CaseTag::derived_dim3_heisenberg);

  py::class_<Dim4BasisResult>(m, "Dim4BasisResult")
      .def_readonly("report", &Dim4BasisResult::report)
      .def_readonly("tag", &Dim4BasisResult::tag)
      .def_readonly("heisenberg_branch", &Dim4BasisResult::heisenberg_branch)
      .def_readonly("heisenberg_a_plus_d", &Dim4BasisResult::heisenberg_a_plus_d)
      .def_readonly("heisenberg_g", &Dim4BasisResult::heisenberg_g)
      .def_readonly("dim2_branch", &Dim4BasisResult::dim2_branch)
      .def_readonly("dim2_rotated_action_max", &Dim4BasisResult::dim2_rotated_action_max);

  m.def("nilpotent_geodesic_basis", &nilpotent_geodesic_basis);
  m.def("codim1_abelian_geodesic_basis", &codim1_abelian_geodesic_basis);
  m.def("milnor_basis_dim3", &milnor_basis_dim3);
  m.def("classify_dim4", &classify_dim4);
  m.def("dim4_geodesic_basis", &dim4_geodesic_basis);
  m.def("find_codim1_abelian_ideal", &find_codim1_abelian_ideal);

  m.def("example5", &example5);
  m.def("example5_flags", &example5_flags);
  m.def("classify_case", &classify_case);
  m.def("milnor_algebra", &milnor_algebra);
  m.def("heisenberg", &heisenberg, py::arg("pairs"));
  m.def("filiform4", &filiform4);
  m.def("standard_algebras", [] {
    std::map<std::string, LieAlgebra> out;
    for (const auto& entry : standard_algebras()) out.emplace(entry.name, entry.algebra);
    return out;
  });
  m.def("spanning_metric", &spanning_metric, py::arg("epsilon"));

  py::class_<QuarticReport>(m, "QuarticReport")
      .def_readonly("epsilon", &QuarticReport::epsilon)
      .def_readonly("coefficients", &QuarticReport::coefficients)
      .def_readonly("roots", &QuarticReport::roots)
      .def_readonly("t_plus", &QuarticReport::t_plus)
      .def_readonly("t_minus", &QuarticReport::t_minus);
  m.def("spanning_quartic", &spanning_quartic, py::arg("epsilon"));

  py::class_<SpanningGeodesics>(m, "SpanningGeodesics")
      .def_readonly("vectors", &SpanningGeodesics::vectors)
      .def_readonly("residuals", &SpanningGeodesics::residuals)
      .def_readonly("span_rank", &SpanningGeodesics::span_rank);
  m.def("spanning_geodesics", &spanning_geodesics, py::arg("epsilon"));

  py::class_<NoBasisCertificate>(m, "NoBasisCertificate")
      .def_readonly("min_residual_v5", &NoBasisCertificate::min_residual_v5)
      .def_readonly("min_residual_v4", &NoBasisCertificate::min_residual_v4)
      .def_readonly("residual_floor", &NoBasisCertificate::residual_floor)
      .def_readonly("cases12_impossible", &NoBasisCertificate::cases12_impossible)
      .def_readonly("normal_of_derived", &NoBasisCertificate::normal_of_derived)
      .def_readonly("normal_residual", &NoBasisCertificate::normal_residual)
      .def_readonly("case5_samples", &NoBasisCertificate::case5_samples)
      .def_readonly("case5_unique", &NoBasisCertificate::case5_unique)
      .def_readonly("case4_samples", &NoBasisCertificate::case4_samples)
      .def_readonly("max_case4_v4_alignment", &NoBasisCertificate::max_case4_v4_alignment)
      .def_readonly("case4_orthogonal_to_v4", &NoBasisCertificate::case4_orthogonal_to_v4)
      .def_readonly("case3_samples", &NoBasisCertificate::case3_samples)
      .def_readonly("case3_image_formula_ok", &NoBasisCertificate::case3_image_formula_ok)
      .def_readonly("trace_ad_x1_on_v3", &NoBasisCertificate::trace_ad_x1_on_v3)
      .def_readonly("trace_fact", &NoBasisCertificate::trace_fact)
      .def_readonly("conclusion", &NoBasisCertificate::conclusion);
  m.def("certify_no_orthonormal_geodesic_basis", &certify_no_orthonormal_geodesic_basis,
        py::arg("metric"), py::arg("seed") = 0x5EED);

  // problem files
  m.def("parse_problem_file", [](const std::string& text) {
    const ProblemFile pf = parse_problem_file(text);
    return py::make_tuple(pf.name, to_algebra(pf), to_metric(pf));
  });
  m.def("serialize_problem_file", [](const std::string& name, const LieAlgebra& alg) {
    return serialize_problem_file(from_algebra(name, alg));
  });
}
