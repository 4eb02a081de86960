#include "mellin/multiplier.hpp"

#include <algorithm>
#include <cmath>

#include "mellin/errors.hpp"
#include "mellin/symbol.hpp"

namespace mellin {

bool Multiplier::limits_consistent() const {
  const Real tol = 1e-4;
  auto near = [&](Complex a, Complex b) { return std::abs(a - b) <= tol; };
  return near(eval(-1e6), lim_minus_inf) && near(eval(1e6), lim_plus_inf) &&
         near(eval(-1e-6), lim_zero_minus) && near(eval(1e-6), lim_zero_plus);
}

Multiplier constant_multiplier(Complex v) {
  Multiplier m;
  m.eval = [v](Real) { return v; };
  m.lim_minus_inf = m.lim_plus_inf = m.lim_zero_minus = m.lim_zero_plus = v;
  m.analytic_lower = m.analytic_upper = true;
  m.kind = Multiplier::Kind::Constant;
  m.param_value = v;
  return m;
}

Multiplier sign_multiplier() {
  Multiplier m;
  m.eval = [](Real xi) { return Complex(xi > 0.0 ? 1.0 : (xi < 0.0 ? -1.0 : 0.0), 0.0); };
  m.lim_minus_inf = m.lim_zero_minus = Complex(-1.0, 0.0);
  m.lim_plus_inf = m.lim_zero_plus = Complex(1.0, 0.0);
  m.kind = Multiplier::Kind::Sign;
  return m;
}

Multiplier blaschke_power(int n) {
  Multiplier m;
  m.eval = [n](Real xi) {
    Complex b = (Complex(xi, 0.0) - kI) / (Complex(xi, 0.0) + kI);
    Complex pw(1.0, 0.0);
    Complex base = (n >= 0) ? b : 1.0 / b;
    for (int j = 0; j < std::abs(n); ++j) pw *= base;
    return pw;
  };
  m.lim_minus_inf = m.lim_plus_inf = Complex(1.0, 0.0);
  Complex at0 = (n % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
  m.lim_zero_minus = m.lim_zero_plus = at0;
  m.analytic_upper = n >= 0;  // pole at -i for n > 0, at +i for n < 0
  m.analytic_lower = n <= 0;
  m.kind = Multiplier::Kind::BlaschkePower;
  m.param_n = n;
  return m;
}

Multiplier g_power(Real s, Complex gamma1, Complex gamma2) {
  if (gamma1.imag() == 0.0 || gamma2.imag() == 0.0)
    throw InputError("g_power requires nonreal gamma parameters");
  // std::arg already lands on the intended one-sided branch for each factor;
  // the additive shift pins the value 1 at xi -> -inf.
  Real shift = -((gamma1.imag() > 0.0 ? -kPi : kPi) - (gamma2.imag() > 0.0 ? kPi : -kPi));
  Multiplier m;
  m.eval = [s, gamma1, gamma2, shift](Real xi) {
    Complex num = Complex(xi, 0.0) - gamma1;
    Complex den = Complex(xi, 0.0) + gamma2;
    Real theta = std::arg(num) - std::arg(den) + shift;
    Real mod = std::pow(std::abs(num) / std::abs(den), s);
    return mod * std::exp(Complex(0.0, s * theta));
  };
  m.lim_minus_inf = Complex(1.0, 0.0);
  m.lim_plus_inf = std::exp(Complex(0.0, s * shift));
  m.lim_zero_minus = m.lim_zero_plus = m.eval(0.0);
  bool int_s = (s == std::floor(s));
  bool g1_up = gamma1.imag() > 0.0, g2_up = gamma2.imag() > 0.0;
  if (int_s && s >= 0.0) {
    m.analytic_upper = g2_up;
    m.analytic_lower = !g2_up;
  } else if (int_s) {
    m.analytic_upper = !g1_up;
    m.analytic_lower = g1_up;
  } else {
    m.analytic_upper = !g1_up && g2_up;
    m.analytic_lower = g1_up && !g2_up;
  }
  m.kind = Multiplier::Kind::GPower;
  m.param_s = s;
  m.param_gamma1 = gamma1;
  m.param_gamma2 = gamma2;
  return m;
}

Multiplier table_multiplier(std::vector<Real> xi, std::vector<Complex> values,
                            Complex lim_minus_inf, Complex lim_plus_inf,
                            Complex lim_zero_minus, Complex lim_zero_plus,
                            bool analytic_lower, bool analytic_upper) {
  if (xi.size() != values.size() || xi.size() < 2)
    throw InputError("table multiplier needs matching xi/value lists of size >= 2");
  if (!std::is_sorted(xi.begin(), xi.end()))
    throw InputError("table multiplier xi samples must be sorted");
  Multiplier m;
  m.eval = [xi = std::move(xi), values = std::move(values)](Real x) -> Complex {
    if (x <= xi.front()) return values.front();
    if (x >= xi.back()) return values.back();
    auto it = std::upper_bound(xi.begin(), xi.end(), x);
    size_t hi = static_cast<size_t>(it - xi.begin());
    size_t lo = hi - 1;
    // no interpolation across the origin: the symbol may jump there
    if (xi[lo] < 0.0 && xi[hi] > 0.0) return x < 0.0 ? values[lo] : values[hi];
    Real w = (x - xi[lo]) / (xi[hi] - xi[lo]);
    return values[lo] * (1.0 - w) + values[hi] * w;
  };
  m.lim_minus_inf = lim_minus_inf;
  m.lim_plus_inf = lim_plus_inf;
  m.lim_zero_minus = lim_zero_minus;
  m.lim_zero_plus = lim_zero_plus;
  m.analytic_lower = analytic_lower;
  m.analytic_upper = analytic_upper;
  m.kind = Multiplier::Kind::Table;
  return m;
}

Multiplier multiplier_product(const Multiplier& a, const Multiplier& b) {
  Multiplier m;
  m.eval = [ea = a.eval, eb = b.eval](Real xi) { return ea(xi) * eb(xi); };
  m.lim_minus_inf = a.lim_minus_inf * b.lim_minus_inf;
  m.lim_plus_inf = a.lim_plus_inf * b.lim_plus_inf;
  m.lim_zero_minus = a.lim_zero_minus * b.lim_zero_minus;
  m.lim_zero_plus = a.lim_zero_plus * b.lim_zero_plus;
  m.analytic_lower = a.analytic_lower && b.analytic_lower;
  m.analytic_upper = a.analytic_upper && b.analytic_upper;
  m.kind = Multiplier::Kind::Product;
  return m;
}

Complex connecting_function(Complex g_minus, Complex g_plus, Real p, Real xi) {
  if (!(p > 1.0)) throw InputError("p must lie in (1, infinity)");
  if (g_minus == g_plus) return g_plus;
  return 0.5 * (g_plus + g_minus) -
         0.5 * kI * (g_plus - g_minus) * cot_pi(Complex(1.0 / p, -xi));
}

}  // namespace mellin
