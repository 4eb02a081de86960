#ifndef MELLIN_FINITE_SECTION_HPP
#define MELLIN_FINITE_SECTION_HPP

#include "mellin/expression.hpp"
#include "mellin/grid_function.hpp"

namespace mellin {

struct SectionResult {
  GridFunction solution;
  Real cond = 0.0;
};

// Piecewise-constant Galerkin section of a scalar expression on the uniform
// partition of [0, rhs.t_max] into n elements: identity/constant and sign
// multipliers contribute closed-form (Toeplitz) blocks, Mellin terms 4-point
// Gauss kernel quadrature with analytic treatment of a crossing Cauchy line.
// Returns the least-squares solution resampled on the rhs grid and the
// 2-norm condition number of the section matrix.
SectionResult finite_section_solve(const OperatorExpression& expr, const SpaceParams& sp,
                                   const GridFunction& rhs, int n);

// Section matrix itself (exposed for conditioning studies).
Matrix finite_section_matrix(const OperatorExpression& expr, Real t_max, int n);

}  // namespace mellin

#endif
