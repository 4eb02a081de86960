#ifndef MELLIN_KERNEL_HPP
#define MELLIN_KERNEL_HPP

#include <string>
#include <vector>

#include "mellin/types.hpp"

namespace mellin {

// One summand d/(t - c)^m of a meromorphic kernel.
struct PoleTerm {
  Complex c;
  int m = 1;
  Complex d;
};

struct MeromorphicKernel {
  std::vector<PoleTerm> terms;

  bool empty() const { return terms.empty(); }
  bool has_positive_real_pole() const;
  MeromorphicKernel conjugated() const;
};

// (p, gamma) index of the weighted Lebesgue space; beta = (1+gamma)/p, s the
// smoothness order of the Bessel scale.
struct SpaceParams {
  Real p = 2.0;
  Real gamma_weight = 0.0;
  Real beta = 0.5;
  Real s = 0.0;

  SpaceParams() = default;
  SpaceParams(Real p_, Real gamma_, Real s_ = 0.0);
  void validate() const;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<int> real_axis_poles;
  std::vector<std::string> violations;
  Real sup_re = -std::numeric_limits<Real>::infinity();
};

AdmissibilityReport validate_admissible(const MeromorphicKernel& k);

Complex eval_kernel(const MeromorphicKernel& k, Real t, Real eps_pole = 1e-12);

// Kernel 1/(pi (t - c)^m).
MeromorphicKernel make_power_pole(Complex c, int m);

enum class ClassicalKernel { N_alpha, N_alpha_star, M_alpha };

MeromorphicKernel make_classical(ClassicalKernel name, Real alpha);

// Kernel of the weighted potential t^k/(pi i (t+1)^{m+1}) expanded in powers
// of (t+1).
MeromorphicKernel make_n_mk(int m, int k);

Real norm_bound(const MeromorphicKernel& k, const SpaceParams& sp);

bool check_classical_condition(const MeromorphicKernel& k, Real p, int m);

}  // namespace mellin

#endif
