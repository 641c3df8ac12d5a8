#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "liegeo/geodesic.hpp"
#include "liegeo/inner_product.hpp"
#include "liegeo/lie_algebra.hpp"

namespace liegeo {

/// The 5-dimensional solvable unimodular algebra with relations
/// [X1,X2]=3X2, [X1,X3]=-4X3, [X1,X4]=-X4, [X1,X5]=2X5, [X2,X3]=X4,
/// [X2,X4]=X5. It admits no orthonormal geodesic basis for any inner product.
LieAlgebra example5();

/// The flag V_1 > V_2 > ... > V_5 with V_i = Span(X_i, ..., X_5).
std::vector<Subspace> example5_flags();

/// Case index 1..5 of a nonzero vector in the example5 reference basis:
/// the unique i with y in V_i \ V_{i+1}, i.e. case 5 means the X_1
/// coefficient is nonzero (relative threshold, so scaling-invariant).
int classify_case(const Vec& y);

LieAlgebra milnor_algebra(double lambda1, double lambda2, double lambda3);
LieAlgebra heisenberg(int pairs);  // dim 2*pairs + 1
LieAlgebra filiform4();

struct NamedAlgebra {
  std::string name;
  LieAlgebra algebra;
};

/// Built-in algebras used by the tests and the CLI: abelian R^n (n <= 5),
/// Heisenberg algebras, the filiform n4, the Milnor family, a dim-4 set
/// covering every classification case, and example5.
std::vector<NamedAlgebra> standard_algebras();

/// The inner product of the spanning-basis construction: X2, X3 orthonormal
/// and orthogonal to V4, |X4| = |X5| = 1, <X4,X5> = epsilon in (0,1), X1
/// unit and orthogonal to the derived algebra.
InnerProduct spanning_metric(double epsilon);

struct QuarticReport {
  double epsilon = 0.0;
  std::array<double, 5> coefficients{};  // degree 4 down to the constant term
  std::vector<double> roots;             // all real roots, ascending
  double t_plus = 0.0;                   // smallest positive root
  double t_minus = 0.0;                  // largest negative root
};

/// The degree-4 polynomial -2e^2 t^4 - (4e+e^3) t^3 + (2-e^2) t^2 + 9e t
/// + (1+4e^2) whose positive/negative roots give the two geodesic
/// directions of V_3 under spanning_metric(e). Roots are isolated by grid
/// sign changes, bisected, and Newton-polished.
QuarticReport spanning_quartic(double epsilon);

struct SpanningGeodesics {
  std::vector<Vec> vectors;  // Y1, Y2, Y3, Y_plus, Y_minus
  std::vector<double> residuals;
  int span_rank = 0;
};

/// The five geodesic vectors spanning example5 under spanning_metric(epsilon):
/// the unit normal of the derived algebra, the two sqrt(3) a2 = +-2 a3
/// directions, and Y_+- = (a3)_+- X3 + X4 + t_+- X5.
SpanningGeodesics spanning_geodesics(double epsilon);

/// Numerical certificate that example5 has no orthonormal geodesic basis
/// under the given inner product, mirroring the impossibility proof fact by
/// fact. `conclusion` is true only when every check passes.
struct NoBasisCertificate {
  // cases (1)-(2): unit vectors of V5 and V4 keep their geodesic residual
  // bounded away from zero (sampled over a dense direction grid)
  double min_residual_v5 = 0.0;
  double min_residual_v4 = 0.0;
  double residual_floor = 1e-6;
  bool cases12_impossible = false;

  // case (5): the only geodesic direction outside V2 is the metric normal
  // of the derived algebra
  Vec normal_of_derived;
  double normal_residual = 0.0;
  int case5_samples = 0;
  bool case5_unique = false;

  // case (4): sampled case-4 geodesics are orthogonal to V4
  int case4_samples = 0;
  double max_case4_v4_alignment = 0.0;
  bool case4_orthogonal_to_v4 = false;

  // case (3): the image of ad(Y) matches its closed form (proof step)
  int case3_samples = 0;
  bool case3_image_formula_ok = false;

  // trace argument: tr(ad(X1)|V3) = -4 - 1 + 2 = -3, metric-independent
  double trace_ad_x1_on_v3 = 0.0;
  bool trace_fact = false;

  bool conclusion = false;
};

NoBasisCertificate certify_no_orthonormal_geodesic_basis(const InnerProduct& metric,
                                                         std::uint64_t seed = 0x5EED);

}  // namespace liegeo
