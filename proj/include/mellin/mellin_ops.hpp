#ifndef MELLIN_MELLIN_OPS_HPP
#define MELLIN_MELLIN_OPS_HPP

#include "mellin/grid_function.hpp"
#include "mellin/kernel.hpp"

namespace mellin {

// Convolution int K(t/tau) f(tau) dtau/tau on a log half-line grid, computed
// by direct quadrature in the log variable. Positive real poles are taken as
// principal values through the symmetric node pairing (the pole offset ln c
// must sit on a grid node).
GridFunction apply_mellin_kernel(const GridFunction& f, const MeromorphicKernel& k,
                                 Real beta = 0.5);

// Both internal routes of apply_mellin_kernel: the direct log-grid quadrature
// and the weighted-substitution/Fourier route with the closed-form symbol.
struct MellinApplyPaths {
  GridFunction direct;
  GridFunction via_fourier;
  Real rel_difference = 0.0;
};
MellinApplyPaths apply_mellin_kernel_paths(const GridFunction& f,
                                           const MeromorphicKernel& k, Real beta = 0.5);

// Trapezoid application of the single-pole operators
//   m=1: (1/pi) int src(tau)/(t - c tau) dtau
//   m=2: (1/pi) int tau src(tau)/(t - c tau)^2 dtau
// where src lives on a linear full-line grid (only tau > 0 contributes);
// evaluated at the given targets, which need not lie on the grid.
Vector pole_operator_apply(Complex c, int m, const GridFunction& src,
                           const RealVector& targets);

}  // namespace mellin

#endif
