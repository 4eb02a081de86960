#include "mellin/rectangle.hpp"

#include <cmath>
#include <limits>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

constexpr Real kInf = std::numeric_limits<Real>::infinity();

Real cot_real(Real a) {
  if (a <= 0.0) return kInf;
  if (a >= kPi) return -kInf;
  if (a == 0.5 * kPi) return 0.0;
  return std::cos(a) / std::sin(a);
}

RectanglePoint leg_point(RectanglePoint::Leg leg, Real u) {
  RectanglePoint p;
  p.leg = leg;
  switch (leg) {
    case RectanglePoint::Leg::Gamma1:
      p.coord = cot_real(kPi * (1.0 - u));
      p.arclen = 2.0 * kPi * u;
      break;
    case RectanglePoint::Leg::Gamma2Plus:
      p.coord = cot_real(0.5 * kPi * u);
      p.arclen = 2.0 * kPi + kPi * u;
      break;
    case RectanglePoint::Leg::Gamma3:
      p.coord = cot_real(kPi * u);
      p.arclen = 3.0 * kPi + 2.0 * kPi * u;
      break;
    case RectanglePoint::Leg::Gamma2Minus:
      p.coord = std::tan(0.5 * kPi * u);
      if (u >= 1.0) p.coord = kInf;
      p.arclen = 5.0 * kPi + kPi * u;
      break;
  }
  return p;
}

}  // namespace

const char* leg_name(RectanglePoint::Leg leg) {
  switch (leg) {
    case RectanglePoint::Leg::Gamma1: return "Gamma1";
    case RectanglePoint::Leg::Gamma2Plus: return "Gamma2Plus";
    case RectanglePoint::Leg::Gamma2Minus: return "Gamma2Minus";
    case RectanglePoint::Leg::Gamma3: return "Gamma3";
  }
  return "?";
}

std::vector<RectanglePoint> rectangle_grid(int n_per_leg) {
  if (n_per_leg < 8) throw InputError("n_per_leg must be >= 8");
  std::vector<RectanglePoint> pts;
  pts.reserve(4 * static_cast<size_t>(n_per_leg));
  const bool even = (n_per_leg % 2 == 0);
  const RectanglePoint::Leg order[4] = {
      RectanglePoint::Leg::Gamma1, RectanglePoint::Leg::Gamma2Plus,
      RectanglePoint::Leg::Gamma3, RectanglePoint::Leg::Gamma2Minus};
  for (auto leg : order)
    for (int j = 0; j < n_per_leg; ++j) {
      Real u = even ? Real(j) / n_per_leg : (Real(j) + 0.5) / n_per_leg;
      pts.push_back(leg_point(leg, u));
    }
  return pts;
}

RectanglePoint point_at_arclen(Real s) {
  s = std::fmod(s, 6.0 * kPi);
  if (s < 0.0) s += 6.0 * kPi;
  if (s < 2.0 * kPi) return leg_point(RectanglePoint::Leg::Gamma1, s / (2.0 * kPi));
  if (s < 3.0 * kPi) return leg_point(RectanglePoint::Leg::Gamma2Plus, (s - 2.0 * kPi) / kPi);
  if (s < 5.0 * kPi) return leg_point(RectanglePoint::Leg::Gamma3, (s - 3.0 * kPi) / (2.0 * kPi));
  return leg_point(RectanglePoint::Leg::Gamma2Minus, (s - 5.0 * kPi) / kPi);
}

}  // namespace mellin
