#ifndef MELLIN_MULTIPLIER_HPP
#define MELLIN_MULTIPLIER_HPP

#include <functional>
#include <vector>

#include "mellin/types.hpp"

namespace mellin {

// Piecewise-continuous Fourier multiplier on the compactified line: continuous
// on each open semi-axis, with declared one-sided limits at 0 and infinity and
// declared analytic-extension flags for the half planes.
struct Multiplier {
  enum class Kind { Constant, Sign, BlaschkePower, GPower, Table, Product, Custom };

  std::function<Complex(Real)> eval;
  Complex lim_minus_inf{1.0, 0.0};
  Complex lim_plus_inf{1.0, 0.0};
  Complex lim_zero_minus{1.0, 0.0};
  Complex lim_zero_plus{1.0, 0.0};
  bool analytic_lower = false;
  bool analytic_upper = false;

  Kind kind = Kind::Custom;
  // Parameters for the closed-form kinds (used by serialization and the
  // finite-section assembler).
  Complex param_value{0.0, 0.0};
  int param_n = 0;
  Real param_s = 0.0;
  Complex param_gamma1{0.0, 1.0};
  Complex param_gamma2{0.0, 1.0};

  Complex operator()(Real xi) const { return eval(xi); }

  // Numeric check that eval approaches the declared limits (probes at
  // |xi| = 1e6 and 1e-6, tolerance 1e-4).
  bool limits_consistent() const;
};

Multiplier constant_multiplier(Complex v);
Multiplier sign_multiplier();
// ((xi - i)/(xi + i))^n
Multiplier blaschke_power(int n);
// ((xi - gamma1)/(xi + gamma2))^s on the continuous branch normalized so the
// value at -inf is 1; for Im gamma1, Im gamma2 > 0 the endpoints are
// 1, e^{2 pi i s} and the value at 0 is e^{pi i s} (gamma1 = gamma2).
Multiplier g_power(Real s, Complex gamma1, Complex gamma2);
Multiplier table_multiplier(std::vector<Real> xi, std::vector<Complex> values,
                            Complex lim_minus_inf, Complex lim_plus_inf,
                            Complex lim_zero_minus, Complex lim_zero_plus,
                            bool analytic_lower = false, bool analytic_upper = false);
Multiplier multiplier_product(const Multiplier& a, const Multiplier& b);

// Arc filling the jump from g_minus (xi -> -inf) to g_plus (xi -> +inf):
// (g+ + g-)/2 - i/2 (g+ - g-) cot(pi(1/p - i xi)).
Complex connecting_function(Complex g_minus, Complex g_plus, Real p, Real xi);

}  // namespace mellin

#endif
