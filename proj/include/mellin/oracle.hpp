#ifndef MELLIN_ORACLE_HPP
#define MELLIN_ORACLE_HPP

#include "mellin/kernel.hpp"
#include "mellin/types.hpp"

namespace mellin {

// Quadrature evaluation of  int_0^inf t^{beta - i xi - 1} K(t) dt, independent
// of the closed forms in symbol.hpp. Off-axis pole terms are integrated on a
// truncated log grid; positive real poles are taken as principal values via
// the symmetric pairing t = c e^{+-u}.
Complex mellin_symbol_oracle(const MeromorphicKernel& k, Real beta, Real xi);

}  // namespace mellin

#endif
