#ifndef MELLIN_SYMBOL_HPP
#define MELLIN_SYMBOL_HPP

#include "mellin/kernel.hpp"
#include "mellin/types.hpp"

namespace mellin {

// cot(pi z) for z = beta - i xi, evaluated through decaying exponentials so
// large |xi| neither overflows nor loses the +/- i limits.
Complex cot_pi(Complex z);

// log(sin(pi z)) up to an integer multiple of 2 pi i.
Complex log_sin_pi(Complex z);

struct SymbolValue {
  Complex value;
  Real xi = 0.0;
  Real beta = 0.5;
};

// Transform of the kernel 1/(pi (t-c)^m) on the line Re = beta:
// off the positive axis  binom(z-1, m-1) (-1)^{m-1} (-c)^{z-m} / sin(pi z),
// on it (m = 1)          c^{z-1} cot(pi z),   z = beta - i xi.
Complex mellin_symbol_pole(Complex c, int m, Real beta, Real xi);

// Transform of the raw pole sum  sum_j d_j (t - c_j)^{-m_j}.
Complex mellin_symbol(const MeromorphicKernel& k, Real beta, Real xi);

// c0 - i c1 cot(pi(beta - i xi)) + mellin_symbol(k, beta, xi).
Complex full_symbol_A_beta(Complex c0, Complex c1, const MeromorphicKernel& k,
                           Real beta, Real xi);

}  // namespace mellin

#endif
