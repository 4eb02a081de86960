#include "mellin/oracle.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

Complex pow_int_inv(Complex base, int m) {
  Complex pw = base;
  for (int j = 1; j < m; ++j) pw *= base;
  return 1.0 / pw;
}

// Trapezoid over [lo, hi] with Richardson control: halve h until the estimate
// stabilizes below tol or the budget runs out.
Complex refined_trapezoid(const std::function<Complex(Real)>& f, Real lo, Real hi,
                          Real h0, Real tol, Real* err_out) {
  auto trap = [&](long n) {
    Real h = (hi - lo) / Real(n);
    Complex acc = 0.5 * (f(lo) + f(hi));
    for (long j = 1; j < n; ++j) acc += f(lo + h * Real(j));
    return acc * h;
  };
  long n = std::max<long>(64, static_cast<long>(std::ceil((hi - lo) / h0)));
  Complex prev = trap(n);
  for (int it = 0; it < 8; ++it) {
    n *= 2;
    Complex cur = trap(n);
    Real err = std::abs(cur - prev) / 3.0;
    if (err < tol || n > (1L << 22)) {
      if (err_out) *err_out = err;
      return cur;
    }
    prev = cur;
  }
  if (err_out) *err_out = std::abs(prev) * 1e-6 + 1e-12;
  return prev;
}

}  // namespace

Complex mellin_symbol_oracle(const MeromorphicKernel& k, Real beta, Real xi) {
  auto rep = validate_admissible(k);
  if (!rep.admissible) throw InvalidPole("kernel is not admissible");
  if (!(beta > 0.0 && beta < 1.0)) throw InputError("beta must lie in (0, 1)");
  if (k.terms.empty()) return Complex(0.0, 0.0);

  std::vector<PoleTerm> off, on;
  for (const auto& t : k.terms)
    (is_positive_real(t.c) ? on : off).push_back(t);

  const Complex z(beta, -xi);
  Complex total(0.0, 0.0);
  Real err_total = 0.0;
  const Real tail_target = 1e-13;
  const Real h0 = std::min(0.02, 0.5 / (1.0 + std::abs(xi)));

  if (!off.empty()) {
    // Tail bounds for K(e^x): e^{beta x} |K(0)| on the left and
    // e^{(beta - m_min) x} on the right.
    Real c0 = 0.0, cinf = 0.0, cmax = 1.0;
    int m_min = off.front().m;
    for (const auto& t : off) {
      c0 += std::abs(t.d) * std::pow(std::abs(t.c), -t.m);
      cinf += std::abs(t.d) * std::pow(2.0, t.m);
      cmax = std::max(cmax, std::abs(t.c));
      m_min = std::min(m_min, t.m);
    }
    Real rate_r = Real(m_min) - beta;
    Real xl = std::log(std::max(c0, 1e-6) / (beta * tail_target)) / beta;
    Real xr = std::log(std::max(cinf, 1e-6) / (rate_r * tail_target)) / rate_r +
              std::log(2.0 * cmax + 2.0);
    xl = std::min(std::max(xl, 20.0), 400.0);
    xr = std::min(std::max(xr, 20.0), 400.0);
    auto integrand = [&](Real x) {
      Real t = std::exp(x);
      Complex kv(0.0, 0.0);
      for (const auto& term : off) kv += term.d * pow_int_inv(Complex(t, 0.0) - term.c, term.m);
      return std::exp(z * x) * kv;
    };
    Real err = 0.0;
    total += refined_trapezoid(integrand, -xl, xr, h0, 1e-11, &err);
    err_total += err + tail_target;
  }

  for (const auto& t : on) {
    // d c^{z-1} PV int_R e^{z u} / (e^u - 1) du, paired over +-u.
    auto paired = [&](Real u) -> Complex {
      if (u == 0.0) return 2.0 * z - 1.0;
      Real sh = std::sinh(0.5 * u);
      return (std::cosh(z * u) - std::cosh((z - 1.0) * u)) / (2.0 * sh * sh);
    };
    Real rate = std::min(beta, 1.0 - beta);
    Real xu = std::min(std::max(std::log(4.0 / (rate * tail_target)) / rate, 20.0), 400.0);
    Real err = 0.0;
    Complex J = refined_trapezoid(paired, 0.0, xu, h0, 1e-11, &err);
    total += t.d * std::exp((z - 1.0) * std::log(t.c.real())) * J;
    err_total += err + tail_target;
  }

  if (err_total > 1e-9)
    throw QuadratureFailure("error estimate " + std::to_string(err_total) + " exceeds 1e-9");
  return total;
}

}  // namespace mellin
