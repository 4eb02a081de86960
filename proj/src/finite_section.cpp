#include "mellin/finite_section.hpp"

#include <cmath>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

const Real kGaussX[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                         0.8611363115940526};
const Real kGaussW[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                         0.3478548451374538};

// primitive with Q''(u) = 1/u, continuous through 0
Real cauchy_primitive(Real u) {
  if (u == 0.0) return 0.0;
  return u * (std::log(std::abs(u)) - 1.0);
}

// int_{I_i} int_{I_j} dtau dt / (t - c tau) for a positive real c, principal
// value across the singular line t = c tau
Complex cauchy_pair_integral(Real a1, Real b1, Real a2, Real b2, Real c) {
  auto Q = [](Real u) { return cauchy_primitive(u); };
  return Complex(-(Q(b1 - c * b2) - Q(a1 - c * b2) - Q(b1 - c * a2) + Q(a1 - c * a2)) / c,
                 0.0);
}

Complex kernel_density(const PoleTerm& pole, Real t, Real tau) {
  // K(t/tau)/tau for K(u) = d/(u-c)^m
  Complex u(t / tau, 0.0);
  Complex base = u - pole.c;
  Complex pw = base;
  for (int j = 1; j < pole.m; ++j) pw *= base;
  return pole.d / (pw * tau);
}

// element-pair integral of K(t/tau)/tau over I_i x I_j
Complex element_pair(const PoleTerm& pole, Real a1, Real b1, Real a2, Real b2) {
  if (is_positive_real(pole.c)) {
    Real c = pole.c.real();
    Real s1 = a1 - c * b2, s2 = b1 - c * a2;  // extreme values of t - c tau
    if (s1 * s2 <= 0.0) return pole.d * cauchy_pair_integral(a1, b1, a2, b2, c);
  }
  Complex acc(0.0, 0.0);
  const Real m1 = 0.5 * (a1 + b1), h1 = 0.5 * (b1 - a1);
  const Real m2 = 0.5 * (a2 + b2), h2 = 0.5 * (b2 - a2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      acc += kGaussW[a] * kGaussW[b] *
             kernel_density(pole, m1 + h1 * kGaussX[a], m2 + h2 * kGaussX[b]);
  return acc * h1 * h2;
}

}  // namespace

Matrix finite_section_matrix(const OperatorExpression& expr, Real t_max, int n) {
  expr.validate();
  if (expr.dim() != 1) throw InputError("finite sections support scalar expressions");
  if (n < 2) throw InputError("need at least 2 elements");
  const Real h = t_max / Real(n);
  Matrix A = Matrix::Zero(n, n);

  Complex d0 = expr.d0(0, 0);
  // constant and sign multipliers have closed-form element integrals
  Complex const_part = d0;
  Complex sign_part(0.0, 0.0);
  if (expr.a0) {
    switch (expr.a0->kind) {
      case Multiplier::Kind::Constant:
        const_part += expr.a0->param_value;
        break;
      case Multiplier::Kind::Sign:
        sign_part += Complex(1.0, 0.0);
        break;
      default:
        throw UnsupportedMultiplier(
            "finite sections support constant and sign Fourier factors");
    }
  }
  for (int i = 0; i < n; ++i) A(i, i) += const_part * h;
  if (sign_part != Complex(0.0, 0.0)) {
    // W_sign = -S on the half line; Galerkin blocks of the Cauchy kernel
    // (1/pi i) / (y - x) are Toeplitz in j - i
    std::vector<Complex> toe(2 * n - 1);
    auto P = [](Real u) {
      return u == 0.0 ? 0.0 : 0.5 * u * u * std::log(std::abs(u)) - 0.75 * u * u;
    };
    for (int d = -(n - 1); d <= n - 1; ++d) {
      Real dd = Real(d) * h;
      Real val = P(dd + h) - 2.0 * P(dd) + P(dd - h);
      toe[static_cast<size_t>(d + n - 1)] = val / (kPi * kI);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        A(i, j) += -sign_part * toe[static_cast<size_t>(j - i + n - 1)];
  }

  for (const auto& term : expr.terms) {
    if (term.a.kind != Multiplier::Kind::Constant ||
        term.b.kind != Multiplier::Kind::Constant)
      throw UnsupportedMultiplier(
          "finite sections support Mellin terms with constant side factors");
    Complex scale = term.a.param_value * term.b.param_value;
    if (term.coef) scale *= (*term.coef)(0, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        A(i, j) += scale * element_pair(term.pole, h * i, h * (i + 1), h * j, h * (j + 1));
  }
  return A;
}

SectionResult finite_section_solve(const OperatorExpression& expr, const SpaceParams& sp,
                                   const GridFunction& rhs, int n) {
  sp.validate();
  rhs.validate();
  if (rhs.axis != GridAxis::linear_halfline)
    throw InputError("finite sections expect a linear half-line right-hand side");
  Matrix A = finite_section_matrix(expr, rhs.t_max, n);
  if (!A.allFinite()) throw SingularSection("section matrix has non-finite entries");

  const Real h = rhs.t_max / Real(n);
  // project the rhs onto the elements (trapezoid over the rhs grid samples)
  Vector b = Vector::Zero(n);
  const Real hg = rhs.step();
  for (int j = 0; j < rhs.n; ++j) {
    int cell = std::min(n - 1, static_cast<int>(rhs.point(j) / h));
    b[cell] += rhs.samples[j] * hg;
  }

  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Real smax = sv(0), smin = sv(sv.size() - 1);
  if (!(smax > 0.0)) throw SingularSection("zero section matrix");
  SectionResult out;
  out.cond = smax / std::max(smin, 1e-300);
  Vector coef = svd.solve(b);
  out.solution = rhs;
  for (int j = 0; j < rhs.n; ++j) {
    int cell = std::min(n - 1, static_cast<int>(rhs.point(j) / h));
    out.solution.samples[j] = coef[cell];  // per-element value
  }
  return out;
}

}  // namespace mellin
