#ifndef MELLIN_IDENTITIES_HPP
#define MELLIN_IDENTITIES_HPP

#include "mellin/grid_function.hpp"
#include "mellin/kernel.hpp"
#include "mellin/types.hpp"

namespace mellin {

enum class IdentityKind { commutation, lifting_single, lifting_double, mellin_vs_zbeta };
enum class LiftingKind { SinglePole, DoublePole };

struct IdentityCheckResult {
  Real rel_residual = 0.0;
  IdentityKind identity = IdentityKind::commutation;
  // grid metadata
  int n = 0;
  Real t_min = 0.0, t_max = 0.0;
  // compact remainder of the double-pole lifting, reported separately
  Real k2_remainder_rel = std::numeric_limits<Real>::quiet_NaN();
};

const char* identity_name(IdentityKind k);

// Window sampling the standard test bump; T is half the full-line window.
struct LabConfig {
  int n = 1 << 14;
  Real window = 40.0;
  Real mu = -0.3;
  Real sigma = 0.6;
};

// ||Lambda^s_{-gamma} K_c phi - c^{-s} K_c Lambda^s_{-c gamma} phi|| relative
// to the left side, on the positive half of the window. Requires a pole off
// the positive axis and Im(c gamma) < 0.
IdentityCheckResult check_commutation(Complex c, Real s, Complex gamma,
                                      const LabConfig& cfg = {});

// Single-pole lifting (both sides conjugated by the potentials) and the
// double-pole variant with its explicit remainder term.
IdentityCheckResult check_lifting(LiftingKind kind, Complex c, Real s, Complex gamma,
                                  const LabConfig& cfg = {});

// Agreement of the two internal routes of the log-grid convolution.
IdentityCheckResult check_mellin_vs_zbeta(const MeromorphicKernel& k, int n = 1 << 11,
                                          Real beta = 0.5);

// (i d/dt - gamma)^s for integer s >= 1 by order-8 central differences on an
// interior-trimmed copy; exposed for the lab tests.
Vector lambda_fd_int(const Vector& u, Real h, int s, Complex gamma);

}  // namespace mellin

#endif
