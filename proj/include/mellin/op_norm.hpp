#ifndef MELLIN_OP_NORM_HPP
#define MELLIN_OP_NORM_HPP

#include "mellin/kernel.hpp"

namespace mellin {

// Operator norm of the Mellin convolution with kernel k on the weighted
// Lebesgue space. At p = 2 this is the exact supremum of the transform
// modulus over the critical line; for other p it is a lower bound from seeded
// random trial functions.
Real estimate_operator_norm(const MeromorphicKernel& k, const SpaceParams& sp,
                            int trials = 16, unsigned seed = 0);

}  // namespace mellin

#endif
