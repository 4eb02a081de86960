#include "mellin/identities.hpp"

#include <cmath>

#include "mellin/errors.hpp"
#include "mellin/fourier_ops.hpp"
#include "mellin/kernel.hpp"
#include "mellin/mellin_ops.hpp"

namespace mellin {

namespace {

// margin kept on both sides of the window; supports order-8 stencils iterated
// up to four times
constexpr int kHalo = 16;

// grid points from -kHalo steps through ext_factor * t_max
RealVector extended_targets(const GridFunction& g, Real ext_factor) {
  const Real h = g.step();
  const int extra = static_cast<int>(std::ceil(std::max(0.0, ext_factor - 1.0) * g.t_max / h));
  const int total = g.n + 2 * kHalo + extra;
  RealVector t(total);
  for (int j = 0; j < total; ++j) t[j] = g.t_min + h * Real(j - kHalo);
  return t;
}

bool is_nonneg_int(Real s) { return s >= 0.0 && s == std::floor(s); }

// (i d/dt - gamma)^s; entries within 4*s of either end are not valid.
Vector lambda_fd_iterate(const Vector& u, Real h, int s, Complex gamma) {
  static const Real w8[9] = {1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5, 0.0,
                             4.0 / 5,   -1.0 / 5,   4.0 / 105, -1.0 / 280};
  Vector cur = u;
  for (int pass = 0; pass < s; ++pass) {
    Vector der = Vector::Zero(cur.size());
    for (Eigen::Index i = 4; i + 4 < cur.size(); ++i) {
      Complex acc(0.0, 0.0);
      for (int o = -4; o <= 4; ++o) acc += w8[o + 4] * cur[i + o];
      der[i] = acc / h;
    }
    cur = kI * der - gamma * cur;
  }
  return cur;
}

// Lambda^s_{-gamma} for s < 0 on slowly decaying data: one-sided convolution
// out(t) = int_0^inf y^{-s-1} e^{-i pi s/2} e^{i gamma y}/Gamma(-s) u(t+y) dy
// with the first cell integrated analytically.
Vector lambda_fractional_neg(const Vector& u_ext, Real h, Real s, Complex gamma,
                             int first, int count) {
  const Real a = -s - 1.0;
  const Complex pref = std::exp(Complex(0.0, -0.5 * kPi * s)) / std::tgamma(-s);
  const Real decay = gamma.imag();
  const long jcap = static_cast<long>((40.0 + 8.0 * std::abs(a)) / (decay * h));
  const long jmax = std::min<long>(u_ext.size(), jcap);
  Eigen::ArrayXcd kv = Eigen::ArrayXcd::Zero(jmax > 0 ? jmax : 1);
  for (long j = 1; j < jmax; ++j) {
    Real y = h * Real(j);
    kv[j] = pref * std::pow(y, a) * std::exp(kI * gamma * y);
  }
  const Complex cell0 = pref * std::pow(h, a + 1.0) / (a + 1.0);
  Vector out = Vector::Zero(count);
  for (int i = 0; i < count; ++i) {
    const long base = first + i;
    Complex acc = u_ext[base] * cell0;
    const long lim = std::min<long>(jmax, u_ext.size() - base);
    for (long j = 1; j < lim; ++j) acc += kv[j] * u_ext[base + j] * h;
    out[i] = acc;
  }
  return out;
}

// Lambda^s_{-gamma} on values over the extended target grid, returned on the
// original window.
Vector lambda_minus_apply(const Vector& u_ext, const GridFunction& ref, Real s,
                          Complex gamma) {
  const Real h = ref.step();
  if (s == 0.0) return u_ext.segment(kHalo, ref.n);
  if (is_nonneg_int(s)) {
    Vector v = lambda_fd_iterate(u_ext, h, static_cast<int>(s), gamma);
    return v.segment(kHalo, ref.n);
  }
  if (s < 0.0) return lambda_fractional_neg(u_ext, h, s, gamma, kHalo, ref.n);
  // positive fractional: negative fractional part first, then the derivative
  const int si = static_cast<int>(std::ceil(s));
  Vector frac = lambda_fractional_neg(u_ext, h, s - si, gamma, 0,
                                      static_cast<int>(u_ext.size()));
  Vector v = lambda_fd_iterate(frac, h, si, gamma);
  return v.segment(kHalo, ref.n);
}

Real rel_residual_positive(const GridFunction& ref, const Vector& lhs, const Vector& rhs) {
  Real num = 0.0, den = 0.0;
  for (int j = 0; j < ref.n; ++j) {
    if (ref.point(j) <= 0.0) continue;
    num += std::norm(lhs[j] - rhs[j]);
    den += std::norm(lhs[j]);
  }
  if (den == 0.0) throw InputError("vanishing left side in residual");
  return std::sqrt(num / den);
}

void check_identity_constraints(Complex c, Complex gamma) {
  if (!(gamma.imag() > 0.0)) throw ConstraintViolation("0 < arg gamma < pi required");
  if (is_positive_real(c)) throw ConstraintViolation("arg c != 0 required");
  if (!((c * gamma).imag() < 0.0))
    throw ConstraintViolation("0 < arg(-c gamma) < pi required");
}

GridFunction test_bump(const LabConfig& cfg) {
  return make_grid(GridAxis::linear_fullline, -cfg.window, cfg.window, cfg.n,
                   log_gaussian(cfg.mu, cfg.sigma));
}

Real ext_factor_for(Real s) { return is_nonneg_int(s) ? 1.0 : 2.2; }

}  // namespace

const char* identity_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::commutation: return "commutation";
    case IdentityKind::lifting_single: return "lifting-k1";
    case IdentityKind::lifting_double: return "lifting-k2";
    case IdentityKind::mellin_vs_zbeta: return "zbeta";
  }
  return "?";
}

Vector lambda_fd_int(const Vector& u, Real h, int s, Complex gamma) {
  return lambda_fd_iterate(u, h, s, gamma);
}

IdentityCheckResult check_commutation(Complex c, Real s, Complex gamma,
                                      const LabConfig& cfg) {
  check_identity_constraints(c, gamma);
  GridFunction phi = test_bump(cfg);
  const Complex cg = -c * gamma;  // Im > 0 by the constraint

  RealVector text = extended_targets(phi, ext_factor_for(s));
  Vector u = pole_operator_apply(c, 1, phi, text);
  Vector lhs = lambda_minus_apply(u, phi, s, gamma);

  GridFunction psi = apply_bessel_potential(phi, s, cg, PotentialSign::plus_gamma);
  RealVector tgrid(phi.n);
  for (int j = 0; j < phi.n; ++j) tgrid[j] = phi.point(j);
  Vector rhs = pole_operator_apply(c, 1, psi, tgrid);
  rhs *= pow_arg02pi(c, Complex(-s, 0.0));

  IdentityCheckResult res;
  res.identity = IdentityKind::commutation;
  res.n = cfg.n;
  res.t_min = -cfg.window;
  res.t_max = cfg.window;
  res.rel_residual = rel_residual_positive(phi, lhs, rhs);
  return res;
}

IdentityCheckResult check_lifting(LiftingKind kind, Complex c, Real s, Complex gamma,
                                  const LabConfig& cfg) {
  check_identity_constraints(c, gamma);
  GridFunction phi = test_bump(cfg);
  const Complex cg = -c * gamma;
  const Complex cms = pow_arg02pi(c, Complex(-s, 0.0));
  const int m = (kind == LiftingKind::SinglePole) ? 1 : 2;

  GridFunction w = (s == 0.0)
                       ? phi
                       : apply_bessel_potential(phi, -s, gamma, PotentialSign::plus_gamma);
  RealVector text = extended_targets(phi, ext_factor_for(s));
  Vector u = pole_operator_apply(c, m, w, text);
  Vector lhs = lambda_minus_apply(u, phi, s, gamma);

  RealVector tgrid(phi.n);
  for (int j = 0; j < phi.n; ++j) tgrid[j] = phi.point(j);
  GridFunction gphi = apply_symbol_fft(phi, [&](Real xi) {
    return std::pow(Complex(xi, 0.0) + cg, Complex(s, 0.0)) *
           std::pow(Complex(xi, 0.0) + gamma, Complex(-s, 0.0));
  });
  Vector rhs = pole_operator_apply(c, m, gphi, tgrid);

  IdentityCheckResult res;
  res.identity = (kind == LiftingKind::SinglePole) ? IdentityKind::lifting_single
                                               : IdentityKind::lifting_double;
  res.n = cfg.n;
  res.t_min = -cfg.window;
  res.t_max = cfg.window;

  if (kind == LiftingKind::DoublePole) {
    rhs -= (s / c) * pole_operator_apply(c, 1, gphi, tgrid);
    // remainder: -s gamma c^{-s} K^1_c W_{g^{s-1}} Lambda^{-1}_gamma
    GridFunction g2 = apply_symbol_fft(phi, [&](Real xi) {
      return std::pow(Complex(xi, 0.0) + cg, Complex(s - 1.0, 0.0)) *
             std::pow(Complex(xi, 0.0) + gamma, Complex(-s, 0.0));
    });
    Vector remainder = (-s * gamma) * pole_operator_apply(c, 1, g2, tgrid);
    Real lhs_norm = 0.0, rem_norm = 0.0;
    for (int j = 0; j < phi.n; ++j) {
      if (phi.point(j) <= 0.0) continue;
      lhs_norm += std::norm(lhs[j]);
      rem_norm += std::norm(cms * remainder[j]);
    }
    res.k2_remainder_rel = std::sqrt(rem_norm / (lhs_norm > 0.0 ? lhs_norm : 1.0));
    rhs += remainder;
  }
  rhs *= cms;
  res.rel_residual = rel_residual_positive(phi, lhs, rhs);
  return res;
}

IdentityCheckResult check_mellin_vs_zbeta(const MeromorphicKernel& k, int n, Real beta) {
  GridFunction f = make_grid(GridAxis::log_halfline, std::exp(-14.0), std::exp(14.0), n,
                             log_gaussian(0.0, 0.8));
  auto paths = apply_mellin_kernel_paths(f, k, beta);
  IdentityCheckResult res;
  res.identity = IdentityKind::mellin_vs_zbeta;
  res.n = n;
  res.t_min = f.t_min;
  res.t_max = f.t_max;
  res.rel_residual = paths.rel_difference;
  return res;
}

}  // namespace mellin
