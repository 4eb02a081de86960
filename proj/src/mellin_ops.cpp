#include "mellin/mellin_ops.hpp"

#include <cmath>

#include "mellin/errors.hpp"
#include "mellin/fourier_ops.hpp"
#include "mellin/symbol.hpp"

namespace mellin {

namespace {

// Kernel value K(e^u) with the singular positive-real pole factors replaced by
// their symmetric pair average when u sits on the pole offset.
Complex log_kernel_value(const MeromorphicKernel& k, Real u, Real pv_snap) {
  Real t = std::exp(u);
  Complex sum(0.0, 0.0);
  for (const auto& term : k.terms) {
    if (is_positive_real(term.c)) {
      Real up = std::log(term.c.real());
      if (std::abs(u - up) < pv_snap) {
        sum += -term.d / (2.0 * term.c);
        continue;
      }
    }
    Complex base = Complex(t, 0.0) - term.c;
    Complex pw = base;
    for (int j = 1; j < term.m; ++j) pw *= base;
    sum += term.d / pw;
  }
  return sum;
}

}  // namespace

MellinApplyPaths apply_mellin_kernel_paths(const GridFunction& f,
                                           const MeromorphicKernel& k, Real beta) {
  f.validate();
  if (f.axis != GridAxis::log_halfline)
    throw InputError("apply_mellin_kernel expects a log half-line grid");
  auto rep = validate_admissible(k);
  if (!rep.admissible) throw InvalidPole("kernel is not admissible");
  if (!(beta > 0.0 && beta < 1.0)) throw InputError("beta must lie in (0, 1)");

  const int n = f.n;
  const Real h = f.step();
  for (const auto& term : k.terms)
    if (is_positive_real(term.c)) {
      Real up = std::log(term.c.real());
      Real dev = std::abs(up / h - std::round(up / h));
      if (dev > 1e-9)
        throw InputError("positive real pole offset ln(c) must sit on a log grid node");
    }

  MellinApplyPaths out;
  out.direct = f;
  if (k.terms.empty()) {
    out.direct.samples.setZero();
    out.via_fourier = out.direct;
    return out;
  }

  // support window of f
  Real peak = f.samples.cwiseAbs().maxCoeff();
  int jlo = 0, jhi = n - 1;
  while (jlo < n && std::abs(f.samples[jlo]) < 1e-300 + 1e-18 * peak) ++jlo;
  while (jhi >= 0 && std::abs(f.samples[jhi]) < 1e-300 + 1e-18 * peak) --jhi;

  // direct log-space quadrature
  for (int i = 0; i < n; ++i) {
    Complex acc(0.0, 0.0);
    Real xi_coord = f.axis_coord(i);
    for (int j = jlo; j <= jhi; ++j)
      acc += log_kernel_value(k, xi_coord - f.axis_coord(j), 0.5 * h) * f.samples[j];
    out.direct.samples[i] = acc * h;
  }

  // substitution route: weight, flip to the full-line variable, multiply by the
  // closed-form symbol, flip back. The window is zero-padded to twice its
  // length: the weighted kernel decays only like e^{-beta|x|}, and unwinding
  // the weight amplifies any wrap-around by e^{beta X} at the edges.
  GridFunction zf;
  zf.axis = GridAxis::linear_fullline;
  zf.n = 2 * n;
  const Real x_last = f.axis_coord(n - 1);
  const int pad = n / 2;
  zf.t_min = -x_last - Real(pad) * h;
  zf.t_max = zf.t_min + Real(2 * n) * h;
  zf.samples = Vector::Zero(2 * n);
  for (int j = 0; j < n; ++j) {
    Real x = zf.point(pad + j);  // t = e^{-x}
    zf.samples[pad + j] = std::exp(-beta * x) * f.samples[n - 1 - j];
  }
  GridFunction w = apply_symbol_fft(zf, [&](Real xi) { return mellin_symbol(k, beta, xi); });
  out.via_fourier = f;
  for (int j = 0; j < n; ++j) {
    Real x = f.axis_coord(j);
    out.via_fourier.samples[j] = std::exp(-beta * x) * w.samples[pad + n - 1 - j];
  }

  Real den = out.direct.samples.norm();
  out.rel_difference =
      (out.direct.samples - out.via_fourier.samples).norm() / (den > 0.0 ? den : 1.0);
  return out;
}

GridFunction apply_mellin_kernel(const GridFunction& f, const MeromorphicKernel& k,
                                 Real beta) {
  return apply_mellin_kernel_paths(f, k, beta).direct;
}

Vector pole_operator_apply(Complex c, int m, const GridFunction& src,
                           const RealVector& targets) {
  src.validate();
  if (src.axis != GridAxis::linear_fullline)
    throw InputError("pole_operator_apply expects a linear full-line grid");
  if (m != 1 && m != 2) throw UnsupportedMultiplicity("pole operators support m = 1, 2");
  if (is_positive_real(c)) throw InvalidPole("quadrature route needs an off-axis pole");

  const int n = src.n;
  const Real h = src.step();
  int jlo = 0;
  while (jlo < n && src.point(jlo) <= 0.0) ++jlo;
  Real peak = src.samples.cwiseAbs().maxCoeff();
  int ja = jlo, jb = n - 1;
  while (ja < n && std::abs(src.samples[ja]) < 1e-18 * peak) ++ja;
  while (jb >= ja && std::abs(src.samples[jb]) < 1e-18 * peak) --jb;
  Vector out = Vector::Zero(targets.size());
  if (ja > jb) return out;

  const int len = jb - ja + 1;
  Eigen::ArrayXd tau(len);
  Eigen::ArrayXcd w(len);
  for (int j = 0; j < len; ++j) {
    tau[j] = src.point(ja + j);
    w[j] = src.samples[ja + j] * h;
  }
  // trapezoid ends: src vanishes beyond the window up to round-off, so plain
  // uniform weights already integrate to spectral accuracy
  const Real cr = c.real(), ci = c.imag();
  Eigen::ArrayXd re_ct = cr * tau, im_ct = ci * tau;
  Eigen::ArrayXcd wt = (m == 2) ? Eigen::ArrayXcd(w * tau.cast<Complex>()) : w;
  for (Eigen::Index i = 0; i < targets.size(); ++i) {
    const Real t = targets[i];
    Eigen::ArrayXd re_d = t - re_ct;
    Eigen::ArrayXd abs2 = re_d.square() + im_ct.square();
    Complex acc;
    if (m == 1) {
      // 1/(t - c tau) = conj / |.|^2
      acc = (wt * (re_d + kI * im_ct) / abs2.cast<Complex>()).sum();
    } else {
      // z = re_d - i im_ct, so 1/z^2 = conj(z^2)/|z|^4
      Eigen::ArrayXd re_q = re_d.square() - im_ct.square();
      Eigen::ArrayXd im_q = 2.0 * re_d * im_ct;
      Eigen::ArrayXd abs4 = abs2.square();
      acc = (wt * (re_q + kI * im_q) / abs4.cast<Complex>()).sum();
    }
    out[i] = acc / kPi;
  }
  return out;
}

}  // namespace mellin
