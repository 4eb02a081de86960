#include <doctest.h>

#include <cmath>
#include <random>

#include "mellin/errors.hpp"
#include "mellin/kernel.hpp"
#include "mellin/oracle.hpp"
#include "mellin/symbol.hpp"

using namespace mellin;

namespace {

// closed rational forms behind the named constructors
Complex n_alpha_rational(Real alpha, Real t) {
  return std::sin(alpha) / kPi * t / (t * t + 1.0 - 2.0 * t * std::cos(alpha));
}
Complex n_alpha_star_rational(Real alpha, Real t) {
  return std::sin(alpha) / kPi / (t * t + 1.0 - 2.0 * t * std::cos(alpha));
}
Complex m_alpha_rational(Real alpha, Real t) {
  return (std::cos(alpha) - t) / (2.0 * kPi * (t * t + 1.0 - 2.0 * t * std::cos(alpha)));
}
Complex n_mk_rational(int m, int k, Real t) {
  return std::pow(t, k) / (kPi * kI * std::pow(t + 1.0, m + 1));
}

std::vector<Real> log_grid_200() {
  std::vector<Real> ts;
  for (int i = 0; i < 200; ++i)
    ts.push_back(std::pow(10.0, -3.0 + 6.0 * Real(i) / 199.0));
  return ts;
}

const std::vector<MeromorphicKernel>& reference_kernels() {
  static const std::vector<MeromorphicKernel> ks = {
      make_power_pole(Complex(-1.0, 0.0), 1),
      make_power_pole(Complex(-1.0, 0.0), 2),
      make_power_pole(std::polar(1.0, 3.0 * kPi / 4.0), 1),
      make_classical(ClassicalKernel::N_alpha, kPi / 3.0),
      make_n_mk(1, 1),
  };
  return ks;
}

}  // namespace

TEST_CASE("admissibility report") {
  MeromorphicKernel single{{{Complex(-1.0, 0.0), 1, Complex(1.0 / kPi, 0.0)}}};
  auto rep = validate_admissible(single);
  CHECK(rep.admissible);
  CHECK(rep.real_axis_poles.empty());
  CHECK(rep.sup_re == doctest::Approx(-1.0));

  MeromorphicKernel bad{{{Complex(2.0, 0.0), 2, Complex(1.0, 0.0)}}};
  auto rep2 = validate_admissible(bad);
  CHECK_FALSE(rep2.admissible);
  CHECK(rep2.violations.size() == 1);

  MeromorphicKernel mixed{{{Complex(2.0, 0.0), 1, Complex(1.0, 0.0)},
                           {Complex(0.0, 1.0), 3, Complex(-2.0, 0.0)}}};
  auto rep3 = validate_admissible(mixed);
  CHECK(rep3.admissible);
  CHECK(rep3.real_axis_poles == std::vector<int>{0});
  CHECK(rep3.sup_re == doctest::Approx(2.0));

  MeromorphicKernel empty;
  auto rep4 = validate_admissible(empty);
  CHECK(rep4.admissible);
  CHECK(rep4.sup_re == -std::numeric_limits<Real>::infinity());

  // idempotent and pure
  auto again = validate_admissible(mixed);
  CHECK(again.admissible == rep3.admissible);
  CHECK(again.real_axis_poles == rep3.real_axis_poles);
}

TEST_CASE("kernel evaluation") {
  auto k = make_power_pole(Complex(-1.0, 0.0), 1);
  CHECK(std::abs(eval_kernel(k, 1.0) - Complex(1.0 / (2.0 * kPi), 0.0)) < 1e-15);

  auto cauchy = make_power_pole(Complex(1.0, 0.0), 1);
  CHECK_THROWS_AS((void)eval_kernel(cauchy, 1.0), PoleHit);
  CHECK_NOTHROW((void)eval_kernel(cauchy, 1.0 + 1e-6));
  CHECK_THROWS_AS((void)eval_kernel(cauchy, 1.0 + 1e-6, 1e-4), PoleHit);

  auto na = make_classical(ClassicalKernel::N_alpha, kPi / 2.0);
  CHECK(std::abs(eval_kernel(na, 1.0) - Complex(1.0 / (2.0 * kPi), 0.0)) < 1e-14);
}

TEST_CASE("constructors match their rational forms on a log grid") {
  auto ts = log_grid_200();
  auto check = [&](const MeromorphicKernel& k, auto rational) {
    for (Real t : ts) {
      Complex expect = rational(t);
      Complex got = eval_kernel(k, t);
      CHECK(std::abs(got - expect) <= 1e-12 * (1.0 + std::abs(expect)));
    }
  };
  for (Real alpha : {kPi / 2.0, kPi / 3.0, -2.0, 0.3}) {
    check(make_classical(ClassicalKernel::N_alpha, alpha),
          [&](Real t) { return n_alpha_rational(alpha, t); });
    check(make_classical(ClassicalKernel::N_alpha_star, alpha),
          [&](Real t) { return n_alpha_star_rational(alpha, t); });
    check(make_classical(ClassicalKernel::M_alpha, alpha),
          [&](Real t) { return m_alpha_rational(alpha, t); });
  }
  for (int m = 0; m <= 3; ++m)
    for (int k = 0; k <= m; ++k)
      check(make_n_mk(m, k), [&](Real t) { return n_mk_rational(m, k, t); });
}

TEST_CASE("constructor edge cases") {
  CHECK_THROWS_AS((void)make_power_pole(Complex(0.0, 0.0), 1), InvalidPole);
  CHECK_THROWS_AS((void)make_power_pole(Complex(1.0, 0.0), 2), InvalidPole);
  CHECK_THROWS_AS((void)make_classical(ClassicalKernel::N_alpha, 0.0), InvalidAngle);
  CHECK_THROWS_AS((void)make_classical(ClassicalKernel::N_alpha, kPi), InvalidAngle);
  CHECK_THROWS_AS((void)make_n_mk(1, 2), IndexRange);

  auto na = make_classical(ClassicalKernel::N_alpha, 0.7);
  REQUIRE(na.terms.size() == 2);
  CHECK(std::abs(na.terms[0].c - std::polar(1.0, 0.7)) < 1e-15);
  CHECK(std::abs(na.terms[1].c - std::polar(1.0, -0.7)) < 1e-15);

  auto n11 = make_n_mk(1, 1);
  REQUIRE(n11.terms.size() == 2);
  // terms at c=-1: multiplicity 2 with coefficient -1/(pi i), multiplicity 1 with +1/(pi i)
  for (const auto& t : n11.terms) {
    CHECK(t.c == Complex(-1.0, 0.0));
    if (t.m == 2) CHECK(std::abs(t.d + 1.0 / (kPi * kI)) < 1e-15);
    if (t.m == 1) CHECK(std::abs(t.d - 1.0 / (kPi * kI)) < 1e-15);
  }
  auto n10 = make_n_mk(1, 0);
  REQUIRE(n10.terms.size() == 1);
  CHECK(n10.terms[0].m == 2);
  CHECK(std::abs(n10.terms[0].d - 1.0 / (kPi * kI)) < 1e-15);
}

TEST_CASE("conjugation symmetry of kernels") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<Real> ang(0.1, kPi - 0.1), mag(0.3, 3.0), coef(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    MeromorphicKernel k;
    int nt = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < nt; ++j)
      k.terms.push_back({std::polar(mag(rng), ang(rng)), 1 + static_cast<int>(rng() % 3),
                         Complex(coef(rng), coef(rng))});
    MeromorphicKernel kc = k.conjugated();
    for (Real t : {0.08, 0.9, 3.7}) {
      CHECK(std::abs(std::conj(eval_kernel(k, t)) - eval_kernel(kc, t)) < 1e-12);
    }
  }
}

TEST_CASE("norm bound values and monotonicity") {
  SpaceParams sp(2.0, 0.0);  // beta = 1/2
  CHECK(norm_bound(make_power_pole(Complex(-1.0, 0.0), 1), sp) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  MeromorphicKernel ki{{{Complex(0.0, 1.0), 1, Complex(1.0, 0.0)}}};
  CHECK(norm_bound(ki, sp) == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(norm_bound(MeromorphicKernel{}, sp) == doctest::Approx(0.0));
  CHECK_THROWS_AS((void)norm_bound(make_power_pole(Complex(1.0, 0.0), 1), sp),
                  RealPolePresent);

  // appending a term never decreases the bound
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<Real> ang(0.15, kPi - 0.15), mag(0.2, 4.0), coef(-1.0, 1.0);
  MeromorphicKernel k;
  Real prev = 0.0;
  for (int j = 0; j < 10; ++j) {
    k.terms.push_back({std::polar(mag(rng), ang(rng)), 1 + static_cast<int>(rng() % 2),
                       Complex(coef(rng), coef(rng))});
    Real b = norm_bound(k, sp);
    CHECK(b >= prev - 1e-14);
    prev = b;
  }
}

TEST_CASE("classical integrability condition") {
  CHECK_FALSE(check_classical_condition(make_power_pole(Complex(-1.0, 0.0), 1), 2.0, 1));
  MeromorphicKernel k2{{{Complex(-1.0, 0.0), 2, 1.0 / (kPi * kI)}}};
  CHECK(check_classical_condition(k2, 2.0, 0));
  CHECK(check_classical_condition(MeromorphicKernel{}, 3.0, 5));
  CHECK_THROWS_AS((void)check_classical_condition(make_power_pole(Complex(1.0, 0.0), 1), 2.0, 1),
                  RealPolePresent);
  // vanishing at 0 of order 1: kernel of the k=m family integrates one order deeper
  auto n11 = make_n_mk(1, 1);  // ~ t at 0
  CHECK(check_classical_condition(n11, 2.0, 1));
  CHECK_FALSE(check_classical_condition(n11, 2.0, 2));
}

TEST_CASE("pole transform closed forms at pinned points") {
  CHECK(std::abs(mellin_symbol_pole(Complex(-1.0, 0.0), 1, 0.5, 0.0) - Complex(1.0, 0.0)) <
        1e-12);
  CHECK(std::abs(mellin_symbol_pole(Complex(1.0, 0.0), 1, 0.5, 0.0)) < 1e-12);
  CHECK(std::abs(mellin_symbol_pole(Complex(-1.0, 0.0), 2, 0.5, 0.0) - Complex(0.5, 0.0)) <
        1e-12);
  CHECK_THROWS_AS((void)mellin_symbol_pole(Complex(1.0, 0.0), 2, 0.5, 0.0), InvalidPole);
  CHECK_THROWS_AS((void)mellin_symbol_pole(Complex(1.0, 1e-14), 1, 0.5, 0.0),
                  BranchViolation);
}

TEST_CASE("kernel transform sums and the full symbol") {
  auto k = make_power_pole(Complex(-1.0, 0.0), 1);
  CHECK(std::abs(mellin_symbol(k, 0.5, 0.0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(mellin_symbol(MeromorphicKernel{}, 0.5, 1.0)) == 0.0);

  CHECK(std::abs(full_symbol_A_beta(Complex(1.0, 0.0), Complex(0.0, 0.0),
                                    MeromorphicKernel{}, 0.37, 2.0) -
                 Complex(1.0, 0.0)) < 1e-15);
  // c1 = i at beta = 1/2 gives i tanh(pi xi)
  for (Real xi : {0.0, 0.5, -1.7, 3.0}) {
    Complex got = full_symbol_A_beta(Complex(0.0, 0.0), kI, MeromorphicKernel{}, 0.5, xi);
    CHECK(std::abs(got - kI * std::tanh(kPi * xi)) < 1e-12);
  }
  CHECK(std::abs(full_symbol_A_beta(Complex(1.0, 0.0), Complex(0.0, 0.0), k, 0.5, 0.0) -
                 Complex(2.0, 0.0)) < 1e-12);
}

TEST_CASE("quadrature oracle pinned values") {
  MeromorphicKernel raw{{{Complex(-1.0, 0.0), 1, Complex(1.0, 0.0)}}};
  CHECK(std::abs(mellin_symbol_oracle(raw, 0.5, 0.0) - Complex(kPi, 0.0)) < 1e-9);
  MeromorphicKernel cauchy_raw{{{Complex(1.0, 0.0), 1, Complex(1.0, 0.0)}}};
  CHECK(std::abs(mellin_symbol_oracle(cauchy_raw, 0.5, 0.0)) < 1e-10);
  MeromorphicKernel ki{{{Complex(0.0, 1.0), 1, Complex(1.0, 0.0)}}};
  CHECK(std::abs(mellin_symbol_oracle(ki, 0.3, 2.0) - mellin_symbol(ki, 0.3, 2.0)) < 1e-8);
  CHECK(std::abs(mellin_symbol_oracle(MeromorphicKernel{}, 0.4, 1.0)) == 0.0);
}

TEST_CASE("closed form agrees with the oracle over the reference set") {
  for (const auto& k : reference_kernels()) {
    for (Real beta : {0.3, 0.5, 0.7}) {
      for (int i = 0; i < 7; ++i) {
        Real xi = -8.0 + 16.0 * Real(i) / 6.0;
        Complex closed = mellin_symbol(k, beta, xi);
        Complex oracle = mellin_symbol_oracle(k, beta, xi);
        CHECK(std::abs(closed - oracle) / (1.0 + std::abs(oracle)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("transform conjugation symmetry") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<Real> ang(0.1, kPi - 0.1), mag(0.3, 2.5), coef(-1.5, 1.5);
  std::uniform_real_distribution<Real> beta_d(0.3, 0.7);
  for (int trial = 0; trial < 12; ++trial) {
    MeromorphicKernel k;
    k.terms.push_back({std::polar(mag(rng), ang(rng)), 1 + static_cast<int>(rng() % 2),
                       Complex(coef(rng), coef(rng))});
    k.terms.push_back({Complex(-mag(rng), 0.0), 1, Complex(coef(rng), coef(rng))});
    Real beta = beta_d(rng);
    Real xi = 3.0 * coef(rng);
    Complex lhs = std::conj(mellin_symbol(k, beta, xi));
    Complex rhs = mellin_symbol(k.conjugated(), beta, -xi);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("transform decay along the line for an off-axis pole") {
  auto k = make_power_pole(Complex(-1.0, 0.0), 1);
  Real at0 = std::abs(mellin_symbol(k, 0.5, 0.0));
  Real at20 = std::abs(mellin_symbol(k, 0.5, 20.0));
  CHECK(at20 <= 1e-6 * at0);
}

TEST_CASE("transform is smooth in xi (bounded second differences)") {
  auto k = make_classical(ClassicalKernel::N_alpha, kPi / 3.0);
  Real h = 1e-3;
  for (Real xi = -4.0; xi <= 4.0; xi += 0.37) {
    Complex d2 = mellin_symbol(k, 0.41, xi + h) - 2.0 * mellin_symbol(k, 0.41, xi) +
                 mellin_symbol(k, 0.41, xi - h);
    CHECK(std::abs(d2) < 10.0 * h * h);
  }
}
