#include "mellin/symbol.hpp"

#include <cmath>

#include "mellin/errors.hpp"

namespace mellin {

Complex cot_pi(Complex z) {
  const Real xi = -z.imag();
  const Complex w = kPi * z;
  if (xi >= 0.0) {
    Complex q = std::exp(Complex(0.0, -2.0) * w);  // |q| = e^{-2 pi xi} <= 1
    return kI * (1.0 + q) / (1.0 - q);
  }
  Complex q = std::exp(Complex(0.0, 2.0) * w);
  return -kI * (1.0 + q) / (1.0 - q);
}

Complex log_sin_pi(Complex z) {
  const Real xi = -z.imag();
  const Complex w = kPi * z;
  const Complex log_2i = Complex(std::log(2.0), 0.5 * kPi);
  if (xi >= 0.0) {
    Complex q = std::exp(Complex(0.0, -2.0) * w);
    return kI * w + std::log(1.0 - q) - log_2i;
  }
  Complex q = std::exp(Complex(0.0, 2.0) * w);
  return -kI * w + std::log(1.0 - q) + Complex(0.0, kPi) - log_2i;
}

Complex mellin_symbol_pole(Complex c, int m, Real beta, Real xi) {
  if (c == Complex(0.0, 0.0)) throw InvalidPole("pole location must be nonzero");
  if (m < 1) throw InvalidPole("multiplicity must be >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw InputError("beta must lie in (0, 1)");
  const Complex z(beta, -xi);
  if (is_positive_real(c)) {
    if (m > 1) throw InvalidPole("positive real pole must have multiplicity 1");
    return std::exp((z - 1.0) * std::log(c.real())) * cot_pi(z);
  }
  const Complex mc = -c;
  if (std::abs(std::arg(mc)) > kPi - 1e-12)
    throw BranchViolation("arg(-c) too close to the cut; pole nearly on the positive axis");
  Complex binom(1.0, 0.0);
  for (int j = 1; j < m; ++j) binom *= (z - Real(j)) / Real(j);
  Real sign = (m % 2 == 1) ? 1.0 : -1.0;
  return sign * binom * std::exp((z - Real(m)) * std::log(mc) - log_sin_pi(z));
}

Complex mellin_symbol(const MeromorphicKernel& k, Real beta, Real xi) {
  auto rep = validate_admissible(k);
  if (!rep.admissible) throw InvalidPole("kernel is not admissible");
  Complex sum(0.0, 0.0);
  for (const auto& t : k.terms)
    sum += kPi * t.d * mellin_symbol_pole(t.c, t.m, beta, xi);
  return sum;
}

Complex full_symbol_A_beta(Complex c0, Complex c1, const MeromorphicKernel& k,
                           Real beta, Real xi) {
  return c0 - kI * c1 * cot_pi(Complex(beta, -xi)) + mellin_symbol(k, beta, xi);
}

}  // namespace mellin
