#ifndef MELLIN_GRID_FUNCTION_HPP
#define MELLIN_GRID_FUNCTION_HPP

#include <functional>

#include "mellin/types.hpp"

namespace mellin {

enum class GridAxis { linear_halfline, linear_fullline, log_halfline };

// Uniform sample vector on one of three axes. linear grids sample
// t_j = t_min + j h with h = (t_max - t_min)/n; the log half-line samples
// t_j = exp(x_min + j hx) with x = ln t uniform on [ln t_min, ln t_max).
struct GridFunction {
  Vector samples;
  Real t_min = 0.0;
  Real t_max = 1.0;
  int n = 0;
  GridAxis axis = GridAxis::linear_fullline;

  void validate() const;  // n = 2^k, k >= 6, consistent bounds
  Real step() const;      // spacing on the declared axis
  Real point(int j) const;  // t_j
  Real axis_coord(int j) const;  // x_j on the declared axis

  Real norm2() const;  // sqrt(h) * l2 norm on the declared axis
};

GridFunction make_grid(GridAxis axis, Real t_min, Real t_max, int n,
                       const std::function<Complex(Real)>& f);

// Bump exp(-((ln t - mu)/sigma)^2), zero for t <= 0.
std::function<Complex(Real)> log_gaussian(Real mu, Real sigma);

}  // namespace mellin

#endif
