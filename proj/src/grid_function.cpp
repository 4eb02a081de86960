#include "mellin/grid_function.hpp"

#include <cmath>

#include "mellin/errors.hpp"

namespace mellin {

void GridFunction::validate() const {
  if (n < 64 || (n & (n - 1)) != 0)
    throw InputError("grid size must be a power of two, at least 64");
  if (samples.size() != n) throw InputError("sample count does not match n");
  if (!(t_max > t_min)) throw InputError("t_max must exceed t_min");
  if (axis != GridAxis::linear_fullline && !(t_min >= 0.0))
    throw InputError("half-line grids require t_min >= 0");
  if (axis == GridAxis::log_halfline && !(t_min > 0.0))
    throw InputError("log grids require t_min > 0");
}

Real GridFunction::step() const {
  if (axis == GridAxis::log_halfline)
    return (std::log(t_max) - std::log(t_min)) / Real(n);
  return (t_max - t_min) / Real(n);
}

Real GridFunction::axis_coord(int j) const {
  Real lo = (axis == GridAxis::log_halfline) ? std::log(t_min) : t_min;
  return lo + step() * Real(j);
}

Real GridFunction::point(int j) const {
  Real x = axis_coord(j);
  return (axis == GridAxis::log_halfline) ? std::exp(x) : x;
}

Real GridFunction::norm2() const {
  return std::sqrt(step()) * samples.norm();
}

GridFunction make_grid(GridAxis axis, Real t_min, Real t_max, int n,
                       const std::function<Complex(Real)>& f) {
  GridFunction g;
  g.axis = axis;
  g.t_min = t_min;
  g.t_max = t_max;
  g.n = n;
  g.samples.resize(n);
  for (int j = 0; j < n; ++j) g.samples[j] = f(g.point(j));
  g.validate();
  return g;
}

std::function<Complex(Real)> log_gaussian(Real mu, Real sigma) {
  return [mu, sigma](Real t) -> Complex {
    if (t <= 0.0) return Complex(0.0, 0.0);
    Real u = (std::log(t) - mu) / sigma;
    return Complex(std::exp(-u * u), 0.0);
  };
}

}  // namespace mellin
