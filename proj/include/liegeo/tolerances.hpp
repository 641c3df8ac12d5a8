#pragma once

namespace liegeo::tol {

/// Algebraic residual tolerance (Jacobi identity, unimodularity traces,
/// centrality checks, bracket consistency).
inline constexpr double algebra = 1e-9;

/// Rank decisions: pivot threshold relative to the largest column norm
/// of the matrix being eliminated.
inline constexpr double rank = 1e-9;

/// Diagonal entries after the zero-diagonal conjugation.
inline constexpr double zero_diag = 1e-9;

/// Orthonormality budget for constructed bases.
inline constexpr double basis = 1e-8;

}  // namespace liegeo::tol
