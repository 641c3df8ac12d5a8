#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/geodesic.hpp"
#include "liegeo/inner_product.hpp"
#include "liegeo/lie_algebra.hpp"

namespace liegeo {

/// Milnor's normal form of a 3-dimensional unimodular metric Lie algebra:
/// an orthonormal basis {Y_1, Y_2, Y_3} with [Y_2,Y_3] = lambda_1 Y_1,
/// [Y_3,Y_1] = lambda_2 Y_2, [Y_1,Y_2] = lambda_3 Y_3.
struct MilnorForm {
  std::vector<Vec> basis;          // three unit vectors in reference coordinates
  std::array<double, 3> lambdas;   // bracket coefficients, keyed to the eigenvalue order
};

enum class Dim4CaseTag {
  not_solvable,
  derived_dim0,
  derived_dim1_nilpotent,
  derived_dim2,
  derived_dim3_abelian,
  derived_dim3_heisenberg,
};

std::string to_string(Dim4CaseTag tag);

/// Orthonormal geodesic basis of a nilpotent algebra for any inner product,
/// by induction: quotient out a unit central line, recurse, lift through the
/// isometry, append the central vector.
BasisReport nilpotent_geodesic_basis(const LieAlgebra& alg, const InnerProduct& metric);

/// Orthonormal geodesic basis of a unimodular algebra with a codimension one
/// abelian ideal: the unit normal of the ideal plus the ideal basis rotated
/// by the zero-diagonal conjugation of the restricted adjoint action.
BasisReport codim1_abelian_geodesic_basis(const LieAlgebra& alg, const InnerProduct& metric,
                                          const Subspace& ideal);

/// Milnor's eigenbasis construction in dimension 3. The map L with
/// L(X_i x X_j) = [X_i, X_j] is symmetric exactly when the algebra is
/// unimodular; its eigenvectors form the geodesic basis.
MilnorForm milnor_basis_dim3(const LieAlgebra& alg, const InnerProduct& metric);

Dim4CaseTag classify_dim4(const LieAlgebra& alg);

struct Dim4BasisResult {
  BasisReport report;
  Dim4CaseTag tag = Dim4CaseTag::derived_dim0;
  // Heisenberg branch: the Jacobi-forced identities a+d = g and a+d+g = 0,
  // recorded before the rotation.
  bool heisenberg_branch = false;
  double heisenberg_a_plus_d = 0.0;
  double heisenberg_g = 0.0;
  // derived-dim-2 branch: entrywise max of the restricted action of the
  // rotated complement vector (should vanish).
  bool dim2_branch = false;
  double dim2_rotated_action_max = 0.0;
};

/// Orthonormal geodesic basis of any unimodular 4-dimensional algebra, for
/// any inner product, dispatching on classify_dim4.
Dim4BasisResult dim4_geodesic_basis(const LieAlgebra& alg, const InnerProduct& metric);

/// Searches the hyperplanes containing the derived algebra for a codimension
/// one abelian ideal (every codimension one ideal contains the derived
/// algebra, so the search is complete over a coordinate net).
std::optional<Subspace> find_codim1_abelian_ideal(const LieAlgebra& alg);

}  // namespace liegeo
