#include "mellin/expression.hpp"

#include <cmath>

#include "mellin/errors.hpp"

namespace mellin {

void OperatorExpression::validate() const {
  const int n = dim();
  if (n < 1 || n > 8) throw DimensionMismatch("matrix dimension must lie in 1..8");
  if (d0.rows() != d0.cols()) throw DimensionMismatch("d0 must be square");
  for (const auto& t : terms) {
    if (t.coef && (t.coef->rows() != n || t.coef->cols() != n))
      throw DimensionMismatch("term coefficient must be " + std::to_string(n) + "x" +
                              std::to_string(n));
    if (t.pole.m < 1 || t.pole.m > 2)
      throw UnsupportedMultiplicity("kernel terms support multiplicity 1 or 2");
    if (t.pole.c == Complex(0.0, 0.0)) throw InvalidPole("pole location must be nonzero");
    if (is_positive_real(t.pole.c)) {
      if (t.pole.m != 1) throw InvalidPole("positive real pole must have multiplicity 1");
      if (t.pole.c != Complex(1.0, 0.0))
        throw InvalidPole("positive real poles are supported at c = 1 only");
    }
  }
}

OperatorExpression scalar_expression(Complex d0) {
  OperatorExpression e;
  e.d0 = Matrix::Constant(1, 1, d0);
  return e;
}

Complex SymbolField::det_at(size_t i) const {
  return dim == 1 ? values[i](0, 0) : values[i].determinant();
}

Complex SymbolField::det(const RectanglePoint& p) const {
  Matrix v = evaluate(p);
  return dim == 1 ? v(0, 0) : v.determinant();
}

Real SymbolField::corner_defect() const {
  // corners sit at arclen 0, 2pi, 3pi, 5pi; compare the two adjacent leg limits
  Real defect = 0.0;
  struct CornerSpec {
    RectanglePoint a, b;
  };
  auto pt = [](RectanglePoint::Leg leg, Real coord, Real s) {
    RectanglePoint p;
    p.leg = leg;
    p.coord = coord;
    p.arclen = s;
    return p;
  };
  const Real inf = std::numeric_limits<Real>::infinity();
  const CornerSpec corners[4] = {
      {pt(RectanglePoint::Leg::Gamma1, inf, 2 * kPi), pt(RectanglePoint::Leg::Gamma2Plus, inf, 2 * kPi)},
      {pt(RectanglePoint::Leg::Gamma2Plus, 0.0, 3 * kPi), pt(RectanglePoint::Leg::Gamma3, inf, 3 * kPi)},
      {pt(RectanglePoint::Leg::Gamma3, -inf, 5 * kPi), pt(RectanglePoint::Leg::Gamma2Minus, 0.0, 5 * kPi)},
      {pt(RectanglePoint::Leg::Gamma2Minus, inf, 6 * kPi), pt(RectanglePoint::Leg::Gamma1, -inf, 0.0)}};
  for (const auto& c : corners)
    defect = std::max(defect, (evaluate(c.a) - evaluate(c.b)).cwiseAbs().maxCoeff());
  return defect;
}

SymbolField make_symbol_field(std::function<Matrix(const RectanglePoint&)> eval,
                              const std::vector<RectanglePoint>& grid) {
  SymbolField f;
  f.evaluate = std::move(eval);
  f.points = grid;
  f.values.reserve(grid.size());
  for (const auto& p : grid) f.values.push_back(f.evaluate(p));
  f.dim = f.values.empty() ? 1 : static_cast<int>(f.values.front().rows());
  f.closed = f.corner_defect() <= 1e-9;
  return f;
}

}  // namespace mellin
