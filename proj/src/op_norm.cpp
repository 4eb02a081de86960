#include "mellin/op_norm.hpp"

#include <cmath>
#include <random>

#include "mellin/errors.hpp"
#include "mellin/mellin_ops.hpp"
#include "mellin/symbol.hpp"

namespace mellin {

Real estimate_operator_norm(const MeromorphicKernel& k, const SpaceParams& sp,
                            int trials, unsigned seed) {
  sp.validate();
  auto rep = validate_admissible(k);
  if (!rep.admissible) throw InvalidPole("kernel is not admissible");
  if (k.terms.empty()) return 0.0;

  if (std::abs(sp.p - 2.0) < 1e-12) {
    // Parseval: the norm is the sup of the transform modulus on the line.
    Real best = 0.0, xi_best = 0.0;
    for (Real xi = -60.0; xi <= 60.0; xi += 0.01) {
      Real v = std::abs(mellin_symbol(k, sp.beta, xi));
      if (v > best) { best = v; xi_best = xi; }
    }
    Real lo = xi_best - 0.01, hi = xi_best + 0.01;
    for (int it = 0; it < 60; ++it) {
      Real m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (std::abs(mellin_symbol(k, sp.beta, m1)) <
          std::abs(mellin_symbol(k, sp.beta, m2)))
        lo = m1;
      else
        hi = m2;
    }
    return std::max(best, std::abs(mellin_symbol(k, sp.beta, 0.5 * (lo + hi))));
  }

  // trial lower bound in L_p(t^gamma)
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Real> mu_d(-2.0, 2.0), sig_d(0.5, 1.2);
  const int n = 1 << 11;
  Real best = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Real mu = mu_d(rng), sig = sig_d(rng);
    GridFunction f = make_grid(GridAxis::log_halfline, std::exp(-14.0), std::exp(14.0),
                               n, log_gaussian(mu, sig));
    GridFunction g = apply_mellin_kernel(f, k, sp.beta);
    // ||u||_p^p = sum |u|^p t^{gamma+1} h  in the log variable
    Real h = f.step(), nf = 0.0, ng = 0.0;
    for (int j = 0; j < n; ++j) {
      Real wgt = std::exp((sp.gamma_weight + 1.0) * f.axis_coord(j)) * h;
      nf += std::pow(std::abs(f.samples[j]), sp.p) * wgt;
      ng += std::pow(std::abs(g.samples[j]), sp.p) * wgt;
    }
    if (nf > 0.0) best = std::max(best, std::pow(ng / nf, 1.0 / sp.p));
  }
  return best;
}

}  // namespace mellin
