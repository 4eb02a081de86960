#include "mellin/kernel.hpp"

#include <cmath>
#include <limits>

#include "mellin/errors.hpp"

namespace mellin {

bool MeromorphicKernel::has_positive_real_pole() const {
  for (const auto& t : terms)
    if (is_positive_real(t.c)) return true;
  return false;
}

MeromorphicKernel MeromorphicKernel::conjugated() const {
  MeromorphicKernel out;
  out.terms.reserve(terms.size());
  for (const auto& t : terms) out.terms.push_back({std::conj(t.c), t.m, std::conj(t.d)});
  return out;
}

SpaceParams::SpaceParams(Real p_, Real gamma_, Real s_)
    : p(p_), gamma_weight(gamma_), beta((1.0 + gamma_) / p_), s(s_) {
  validate();
}

void SpaceParams::validate() const {
  if (!(p > 1.0) || !std::isfinite(p)) throw InputError("p must lie in (1, infinity)");
  if (!(gamma_weight > -1.0 && gamma_weight < p - 1.0))
    throw InputError("gamma_weight must lie in (-1, p-1)");
  Real b = (1.0 + gamma_weight) / p;
  if (std::abs(b - beta) > 1e-12 * (1.0 + std::abs(b)))
    throw InputError("stored beta does not match (1+gamma)/p");
  if (!(beta > 0.0 && beta < 1.0)) throw InputError("beta must lie in (0, 1)");
}

AdmissibilityReport validate_admissible(const MeromorphicKernel& k) {
  AdmissibilityReport rep;
  for (int j = 0; j < static_cast<int>(k.terms.size()); ++j) {
    const auto& t = k.terms[j];
    if (t.c == Complex(0.0, 0.0)) {
      rep.violations.push_back("term " + std::to_string(j) + ": pole at the origin");
      continue;
    }
    if (t.m < 1) rep.violations.push_back("term " + std::to_string(j) + ": multiplicity < 1");
    rep.sup_re = std::max(rep.sup_re, t.c.real());
    if (is_positive_real(t.c)) {
      rep.real_axis_poles.push_back(j);
      if (t.m > 1)
        rep.violations.push_back("term " + std::to_string(j) +
                                 ": positive real pole of multiplicity > 1");
    }
  }
  rep.admissible = rep.violations.empty();
  return rep;
}

Complex eval_kernel(const MeromorphicKernel& k, Real t, Real eps_pole) {
  if (!(t > 0.0)) throw InputError("eval_kernel requires t > 0");
  Complex sum(0.0, 0.0);
  for (const auto& term : k.terms) {
    if (is_positive_real(term.c) && std::abs(t - term.c.real()) < eps_pole)
      throw PoleHit("evaluation within eps_pole of real pole at t=" +
                    std::to_string(term.c.real()));
    Complex base = Complex(t, 0.0) - term.c;
    Complex pw = base;
    for (int j = 1; j < term.m; ++j) pw *= base;
    sum += term.d / pw;
  }
  return sum;
}

MeromorphicKernel make_power_pole(Complex c, int m) {
  if (c == Complex(0.0, 0.0)) throw InvalidPole("pole location must be nonzero");
  if (m < 1) throw InvalidPole("multiplicity must be >= 1");
  if (is_positive_real(c) && m > 1)
    throw InvalidPole("positive real pole must have multiplicity 1");
  return MeromorphicKernel{{PoleTerm{c, m, Complex(1.0 / kPi, 0.0)}}};
}

MeromorphicKernel make_classical(ClassicalKernel name, Real alpha) {
  if (!(alpha > -kPi && alpha < kPi) || alpha == 0.0)
    throw InvalidAngle("alpha must lie in (-pi, pi) \\ {0}");
  const Complex a = std::polar(1.0, alpha);
  const Complex ab = std::conj(a);
  MeromorphicKernel k;
  switch (name) {
    case ClassicalKernel::N_alpha:
      // sin(a)/pi * u / (u^2 + 1 - 2 u cos a)
      k.terms = {{a, 1, a / (2.0 * kPi * kI)}, {ab, 1, -ab / (2.0 * kPi * kI)}};
      break;
    case ClassicalKernel::N_alpha_star:
      // sin(a)/pi / (u^2 + 1 - 2 u cos a)
      k.terms = {{a, 1, Complex(1.0, 0.0) / (2.0 * kPi * kI)},
                 {ab, 1, Complex(-1.0, 0.0) / (2.0 * kPi * kI)}};
      break;
    case ClassicalKernel::M_alpha:
      // (cos a - u) / (2 pi (u^2 + 1 - 2 u cos a))
      k.terms = {{a, 1, Complex(-1.0 / (4.0 * kPi), 0.0)},
                 {ab, 1, Complex(-1.0 / (4.0 * kPi), 0.0)}};
      break;
  }
  return k;
}

MeromorphicKernel make_n_mk(int m, int k) {
  if (m < 0 || k < 0 || k > m) throw IndexRange("need 0 <= k <= m");
  // t^k/(pi i (t+1)^{m+1}) with t^k = ((t+1) - 1)^k.
  MeromorphicKernel out;
  const Complex base = Complex(1.0, 0.0) / (kPi * kI);
  Real binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * Real(k - j + 1) / Real(j);
    Real sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
    out.terms.push_back({Complex(-1.0, 0.0), m + 1 - j, base * binom * sign});
  }
  return out;
}

namespace {

Real abs_binom_beta(Real beta, int m) {
  // |binom(beta-1, m-1)|
  Real v = 1.0;
  for (int j = 1; j < m; ++j) v *= std::abs(beta - j) / j;
  return v;
}

}  // namespace

Real norm_bound(const MeromorphicKernel& k, const SpaceParams& sp) {
  auto rep = validate_admissible(k);
  if (!rep.admissible) throw InvalidPole("kernel is not admissible");
  if (k.has_positive_real_pole())
    throw RealPolePresent("norm bound excludes positive real poles");
  Real beta = sp.beta;
  Real sum = 0.0;
  for (const auto& t : k.terms) {
    Real e = (t.c.real() < 0.0) ? 0.5 * t.m : Real(t.m);
    sum += std::pow(2.0, e) * std::abs(t.d) * abs_binom_beta(beta, t.m) *
           std::pow(std::abs(t.c), beta - t.m);
  }
  return kPi / std::sin(kPi * beta) * sum;
}

bool check_classical_condition(const MeromorphicKernel& k, Real p, int m) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InputError("p must lie in (1, infinity)");
  if (m < 0) throw IndexRange("m must be >= 0");
  if (k.has_positive_real_pole())
    throw RealPolePresent("integral diverges at a positive real pole");
  if (k.terms.empty()) return true;

  // Taylor coefficients at t=0: a_n = sum_j d_j (-c_j)^{-m_j} binom(m_j+n-1, n) c_j^{-n}.
  // The integral at 0 is finite iff the vanishing order r satisfies r > m - 1/p,
  // i.e. r >= m; the tail at infinity always converges for a pole sum.
  int max_order = 0;
  for (const auto& t : k.terms) max_order += t.m;
  for (int n = 0; n <= max_order; ++n) {
    Complex an(0.0, 0.0);
    Real scale = 0.0;
    for (const auto& t : k.terms) {
      Real binom = 1.0;
      for (int j = 1; j <= n; ++j) binom *= Real(t.m - 1 + j) / Real(j);
      Complex v = t.d * std::pow(-t.c, Complex(-t.m, 0.0)) * binom *
                  std::pow(t.c, Complex(-n, 0.0));
      an += v;
      scale += std::abs(v);
    }
    if (std::abs(an) > 1e-12 * (scale + 1e-300)) {
      return n >= m;  // n = vanishing order r
    }
  }
  return true;  // numerically the zero kernel
}

}  // namespace mellin
