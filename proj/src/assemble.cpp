#include "mellin/assemble.hpp"

#include <cmath>

#include "mellin/errors.hpp"
#include "mellin/symbol.hpp"

namespace mellin {

namespace {

using Leg = RectanglePoint::Leg;

Complex eval_or_limit(const Multiplier& b, Real x, bool from_left_of_zero) {
  if (std::isinf(x)) return x > 0.0 ? b.lim_plus_inf : b.lim_minus_inf;
  if (x == 0.0) return from_left_of_zero ? b.lim_zero_minus : b.lim_zero_plus;
  return b.eval(x);
}

// Lifted single/double pole factor; s = 0 reproduces the Lebesgue tables.
Complex kernel_leg_value(const PoleTerm& pole, Real p, Real s, const RectanglePoint& pt) {
  const Real beta = 1.0 / p;
  const Real scale_pi_d = kPi;  // combined with pole.d below
  const Complex d = pole.d * scale_pi_d;
  if (is_positive_real(pole.c)) {
    // Cauchy-type factor at c = 1: -i cot on the horizontal legs, +-1 on the
    // vertical ones, independent of s.
    switch (pt.leg) {
      case Leg::Gamma2Plus: return d * Complex(1.0, 0.0);
      case Leg::Gamma2Minus: return d * Complex(-1.0, 0.0);
      case Leg::Gamma1:
      case Leg::Gamma3:
        if (std::isinf(pt.coord))
          return d * (pt.coord > 0.0 ? Complex(1.0, 0.0) : Complex(-1.0, 0.0));
        return d * (-kI) * cot_pi(Complex(beta, -pt.coord));
    }
    return Complex(0.0, 0.0);
  }
  if (pt.leg == Leg::Gamma2Plus || pt.leg == Leg::Gamma2Minus) return Complex(0.0, 0.0);
  if (std::isinf(pt.coord)) return Complex(0.0, 0.0);
  const Real xi = pt.coord;
  Complex base = mellin_symbol_pole(pole.c, pole.m, beta, xi);
  if (pole.m == 2 && s != 0.0)
    base -= s / pole.c * mellin_symbol_pole(pole.c, 1, beta, xi);
  Complex c_pow_ms = pow_arg_half_open(pole.c, Complex(-s, 0.0));
  if (pt.leg == Leg::Gamma3 && s != 0.0)
    c_pow_ms *= std::pow(-pole.c, Complex(s, 0.0));
  return d * c_pow_ms * base;
}

struct Assembler {
  OperatorExpression expr;
  Real p = 2.0;
  Real s = 0.0;
  bool bessel = false;

  Matrix operator()(const RectanglePoint& pt) const {
    const int n = expr.dim();
    const Matrix id = Matrix::Identity(n, n);
    Multiplier lift = bessel ? g_power(s, kI, kI) : constant_multiplier(Complex(1.0, 0.0));
    Matrix out = expr.d0 * multiplier_leg_value(lift, p, pt);
    if (expr.a0) {
      Multiplier m = bessel ? multiplier_product(*expr.a0, lift) : *expr.a0;
      out += id * multiplier_leg_value(m, p, pt);
    }
    for (const auto& term : expr.terms) {
      Complex v = multiplier_leg_value(term.a, p, pt) *
                  kernel_leg_value(term.pole, p, bessel ? s : 0.0, pt) *
                  multiplier_leg_value(term.b, p, pt);
      out += (term.coef ? *term.coef : id) * v;
    }
    return out;
  }
};

}  // namespace

Complex multiplier_leg_value(const Multiplier& b, Real p, const RectanglePoint& pt) {
  switch (pt.leg) {
    case Leg::Gamma1:
      if (std::isinf(pt.coord))
        return pt.coord > 0.0 ? b.lim_minus_inf : b.lim_plus_inf;
      return connecting_function(b.lim_plus_inf, b.lim_minus_inf, p, pt.coord);
    case Leg::Gamma2Plus:
      return eval_or_limit(b, -pt.coord, true);
    case Leg::Gamma2Minus:
      return eval_or_limit(b, pt.coord, false);
    case Leg::Gamma3:
      if (std::isinf(pt.coord))
        return pt.coord > 0.0 ? b.lim_zero_minus : b.lim_zero_plus;
      return connecting_function(b.lim_zero_plus, b.lim_zero_minus, p, pt.coord);
  }
  return Complex(0.0, 0.0);
}

SymbolField assemble_symbol_lp(const OperatorExpression& expr, Real p,
                               const std::vector<RectanglePoint>& grid) {
  expr.validate();
  if (!(p > 1.0) || !std::isfinite(p)) throw InputError("p must lie in (1, infinity)");
  Assembler a{expr, p, 0.0, false};
  return make_symbol_field(a, grid);
}

SymbolField assemble_symbol_bessel(const OperatorExpression& expr, Real p, Real s,
                                   const std::vector<RectanglePoint>& grid) {
  expr.validate();
  if (!(p > 1.0) || !std::isfinite(p)) throw InputError("p must lie in (1, infinity)");
  const bool identified = (s > 1.0 / p - 1.0 && s < 1.0 / p);
  if (!identified) {
    for (const auto& term : expr.terms)
      if (!term.a.analytic_lower || !term.b.analytic_upper)
        throw AnalyticityViolation(
            "s outside (1/p-1, 1/p) requires lower-analytic a and upper-analytic b factors");
  }
  Assembler a{expr, p, s, true};
  return make_symbol_field(a, grid);
}

}  // namespace mellin
