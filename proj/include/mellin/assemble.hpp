#ifndef MELLIN_ASSEMBLE_HPP
#define MELLIN_ASSEMBLE_HPP

#include "mellin/expression.hpp"

namespace mellin {

// Symbol of the expression acting on the unweighted Lebesgue space: Mellin
// factors carry their transform at beta = 1/p on the horizontal legs, Fourier
// factors carry connecting arcs over their jumps at 0 and infinity.
SymbolField assemble_symbol_lp(const OperatorExpression& expr, Real p,
                               const std::vector<RectanglePoint>& grid);

// Symbol on the smoothness-s scale: the lifted tables for the identity, the
// Fourier factors and the single- and double-pole Mellin factors.
SymbolField assemble_symbol_bessel(const OperatorExpression& expr, Real p, Real s,
                                   const std::vector<RectanglePoint>& grid);

// Leg values of a single Fourier multiplier (the building block of both
// assemblers): connecting arcs on Gamma1/Gamma3, b(-eta) on Gamma2+, b(eta) on
// Gamma2-.
Complex multiplier_leg_value(const Multiplier& b, Real p, const RectanglePoint& pt);

}  // namespace mellin

#endif
