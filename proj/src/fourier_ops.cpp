#include "mellin/fourier_ops.hpp"

#include <cmath>
#include <unsupported/Eigen/FFT>
#include <vector>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

void check_window(const GridFunction& f) {
  Real peak = f.samples.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  Real ends = std::max(std::abs(f.samples[0]), std::abs(f.samples[f.n - 1]));
  if (ends > 1e-8 * peak)
    throw WindowLeakage("samples at the window ends exceed 1e-8 of the peak");
}

}  // namespace

GridFunction apply_symbol_fft(const GridFunction& f,
                              const std::function<Complex(Real)>& symbol) {
  f.validate();
  if (f.axis != GridAxis::linear_fullline)
    throw InputError("FFT multiplier application needs a uniform full-line window");
  const int n = f.n;
  const Real h = f.step();
  Eigen::FFT<Real> fft;
  std::vector<Complex> in(f.samples.data(), f.samples.data() + n), freq(n);
  fft.fwd(freq, in);
  // index k carries xi_k = -2 pi k/(n h) for k < n/2 and -2 pi (k-n)/(n h) above
  for (int k = 0; k < n; ++k) {
    Real cyc = (k < n - k ? Real(k) : Real(k - n)) / (Real(n) * h);
    freq[static_cast<size_t>(k)] *= symbol(-2.0 * kPi * cyc);
  }
  std::vector<Complex> out(n);
  fft.inv(out, freq);
  GridFunction g = f;
  for (int j = 0; j < n; ++j) g.samples[j] = out[static_cast<size_t>(j)];
  return g;
}

GridFunction apply_fourier_multiplier(const GridFunction& f, const Multiplier& a) {
  if (f.axis != GridAxis::linear_fullline)
    throw InputError("apply_fourier_multiplier expects a linear full-line grid");
  check_window(f);
  return apply_symbol_fft(f, a.eval);
}

Complex bessel_symbol(Real xi, Real s, Complex gamma, PotentialSign sign) {
  Complex base = (sign == PotentialSign::minus_gamma) ? Complex(xi, 0.0) - gamma
                                                      : Complex(xi, 0.0) + gamma;
  return std::pow(base, Complex(s, 0.0));
}

GridFunction apply_bessel_potential(const GridFunction& f, Real s, Complex gamma,
                                    PotentialSign sign) {
  if (!(gamma.imag() > 0.0)) throw InputError("bessel potential requires Im gamma > 0");
  if (f.axis != GridAxis::linear_fullline)
    throw InputError("apply_bessel_potential expects a linear full-line grid");
  check_window(f);
  if (s == 0.0) return f;
  return apply_symbol_fft(f, [s, gamma, sign](Real xi) {
    return bessel_symbol(xi, s, gamma, sign);
  });
}

}  // namespace mellin
