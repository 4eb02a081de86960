#ifndef MELLIN_TYPES_HPP
#define MELLIN_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace mellin {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Real kPi = 3.14159265358979323846264338328;
inline constexpr Complex kI{0.0, 1.0};

// arg in [-pi, pi): maps the cut value +pi to -pi (used by the lifted symbol tables).
inline Real arg_half_open(Complex c) {
  Real a = std::arg(c);
  if (a >= kPi - 1e-15) a -= 2.0 * kPi;
  return a;
}

// arg in (0, 2*pi): branch used by the commutation/lifting identities.
inline Real arg_zero_two_pi(Complex c) {
  Real a = std::arg(c);
  if (a <= 0.0) a += 2.0 * kPi;
  return a;
}

inline bool is_positive_real(Complex c) {
  return c.imag() == 0.0 && c.real() > 0.0;
}

// c^w with arg c taken in (0, 2*pi).
inline Complex pow_arg02pi(Complex c, Complex w) {
  Complex logc(std::log(std::abs(c)), arg_zero_two_pi(c));
  return std::exp(w * logc);
}

// c^w with arg c taken in [-pi, pi).
inline Complex pow_arg_half_open(Complex c, Complex w) {
  Complex logc(std::log(std::abs(c)), arg_half_open(c));
  return std::exp(w * logc);
}

}  // namespace mellin

#endif
