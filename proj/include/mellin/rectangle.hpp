#ifndef MELLIN_RECTANGLE_HPP
#define MELLIN_RECTANGLE_HPP

#include <vector>

#include "mellin/types.hpp"

namespace mellin {

// Point on the compactified boundary rectangle carrying the operator symbol.
// Clockwise traversal: Gamma1 (xi: -inf -> +inf, top), Gamma2Plus (eta: inf ->
// 0, right), Gamma3 (xi: +inf -> -inf, bottom), Gamma2Minus (eta: 0 -> inf,
// left). Arc length is measured in the rho-metric
// rho(x, y) = |arg((x-i)/(x+i)) - arg((y-i)/(y+i))|, total length 6 pi.
struct RectanglePoint {
  enum class Leg { Gamma1, Gamma2Plus, Gamma2Minus, Gamma3 };
  Leg leg = Leg::Gamma1;
  Real coord = 0.0;   // xi on Gamma1/Gamma3, eta on Gamma2+-
  Real arclen = 0.0;  // position in [0, 6 pi)
};

const char* leg_name(RectanglePoint::Leg leg);

// 4 * n_per_leg points, uniformly spaced in the rho-metric on each leg.
std::vector<RectanglePoint> rectangle_grid(int n_per_leg);

// Point of the clockwise traversal at arc length s in [0, 6 pi).
RectanglePoint point_at_arclen(Real s);

}  // namespace mellin

#endif
