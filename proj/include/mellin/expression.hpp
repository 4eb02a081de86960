#ifndef MELLIN_EXPRESSION_HPP
#define MELLIN_EXPRESSION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mellin/kernel.hpp"
#include "mellin/multiplier.hpp"
#include "mellin/rectangle.hpp"
#include "mellin/types.hpp"

namespace mellin {

// Term list  d0 I + W_{a0} + sum_j C_j W_{a_j} K_{c_j} W_{b_j}  where each
// K_{c_j} is a single-pole Mellin convolution of multiplicity 1 or 2 and the
// optional C_j are constant N x N coefficient matrices.
struct OperatorExpression {
  struct Term {
    Multiplier a;
    PoleTerm pole;  // kernel d/(t - c)^m, m in {1, 2}
    Multiplier b;
    std::optional<Matrix> coef;
  };

  Matrix d0 = Matrix::Zero(1, 1);
  std::optional<Multiplier> a0;
  std::vector<Term> terms;

  int dim() const { return static_cast<int>(d0.rows()); }
  void validate() const;  // throws DimensionMismatch / UnsupportedMultiplicity / InvalidPole
};

OperatorExpression scalar_expression(Complex d0);

struct SymbolField {
  std::vector<RectanglePoint> points;  // ordered by arclen
  std::vector<Matrix> values;
  int dim = 1;
  bool closed = false;
  std::function<Matrix(const RectanglePoint&)> evaluate;  // exact re-evaluation

  Complex det_at(size_t i) const;
  Complex det(const RectanglePoint& p) const;
  // largest corner mismatch between adjacent legs
  Real corner_defect() const;
};

SymbolField make_symbol_field(std::function<Matrix(const RectanglePoint&)> eval,
                              const std::vector<RectanglePoint>& grid);

}  // namespace mellin

#endif
