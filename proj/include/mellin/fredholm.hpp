#ifndef MELLIN_FREDHOLM_HPP
#define MELLIN_FREDHOLM_HPP

#include "mellin/expression.hpp"

namespace mellin {

struct FredholmReport {
  Real min_abs_det = 0.0;
  bool elliptic = false;
  long winding = 0;
  long index = 0;
  bool locally_invertible_at_zero = false;
};

struct FredholmOptions {
  Real tol_ell = 1e-10;
  Real closure_tol = 1e-6;
  int max_depth = 20;
};

// min |det| over the field with local refinement until stable to 1%.
std::pair<Real, bool> ellipticity(const SymbolField& field,
                                  const FredholmOptions& opt = {});

// Accumulated argument of det along the clockwise traversal, refined until
// every step turns by less than pi/2; winding = total / 2 pi, index = -winding.
std::pair<long, long> winding_index(const SymbolField& field,
                                    const FredholmOptions& opt = {});

bool local_invertibility_at_zero(const SymbolField& field,
                                 const FredholmOptions& opt = {});

FredholmReport analyze_field(const SymbolField& field, const FredholmOptions& opt = {});

}  // namespace mellin

#endif
