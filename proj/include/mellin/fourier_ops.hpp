#ifndef MELLIN_FOURIER_OPS_HPP
#define MELLIN_FOURIER_OPS_HPP

#include "mellin/grid_function.hpp"
#include "mellin/multiplier.hpp"

namespace mellin {

enum class PotentialSign { minus_gamma, plus_gamma };

// F^{-1} a F on a full-line grid (forward transform e^{+i xi x}).
GridFunction apply_fourier_multiplier(const GridFunction& f, const Multiplier& a);

// Same, for a plain pointwise symbol.
GridFunction apply_symbol_fft(const GridFunction& f,
                              const std::function<Complex(Real)>& symbol);

// Multiplier (xi - gamma)^s (minus_gamma, branch arg in (-pi, 0)) or
// (xi + gamma)^s (plus_gamma, branch arg in (0, pi)), Im gamma > 0.
GridFunction apply_bessel_potential(const GridFunction& f, Real s, Complex gamma,
                                    PotentialSign sign);

// symbol of the potential at a point, exposed for composing ratios
Complex bessel_symbol(Real xi, Real s, Complex gamma, PotentialSign sign);

}  // namespace mellin

#endif
