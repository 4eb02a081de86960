#include "mellin/fredholm.hpp"

#include <algorithm>
#include <cmath>

#include "mellin/errors.hpp"

namespace mellin {

namespace {

Real wrap_arclen(Real s) {
  Real m = std::fmod(s, 6.0 * kPi);
  return m < 0.0 ? m + 6.0 * kPi : m;
}

}  // namespace

std::pair<Real, bool> ellipticity(const SymbolField& field, const FredholmOptions& opt) {
  if (field.points.empty()) throw InputError("empty symbol field");
  size_t imin = 0;
  Real best = std::abs(field.det_at(0));
  for (size_t i = 1; i < field.points.size(); ++i) {
    Real v = std::abs(field.det_at(i));
    if (v < best) { best = v; imin = i; }
  }
  // refine around the minimizer until the minimum is stable to 1%
  const size_t n = field.points.size();
  Real lo = field.points[imin == 0 ? n - 1 : imin - 1].arclen;
  Real hi = field.points[(imin + 1) % n].arclen;
  if (hi <= lo) hi += 6.0 * kPi;
  for (int depth = 0; depth < 40; ++depth) {
    Real prev = best;
    const int probes = 9;
    Real smin = lo;
    for (int j = 0; j <= probes; ++j) {
      Real sp = lo + (hi - lo) * Real(j) / probes;
      Real v = std::abs(field.det(point_at_arclen(wrap_arclen(sp))));
      if (v < best) { best = v; smin = sp; }
    }
    Real w = (hi - lo) / probes;
    lo = smin - w;
    hi = smin + w;
    if (std::abs(prev - best) <= 0.01 * (best + 1e-300) || best < 0.5 * opt.tol_ell) break;
  }
  return {best, best > opt.tol_ell};
}

std::pair<long, long> winding_index(const SymbolField& field, const FredholmOptions& opt) {
  auto [min_det, elliptic] = ellipticity(field, opt);
  if (!elliptic)
    throw NotElliptic("winding is undefined: min |det| = " + std::to_string(min_det));

  struct Node {
    Real s;
    Complex det;
  };
  std::vector<Node> nodes;
  nodes.reserve(field.points.size() + 1);
  for (size_t i = 0; i < field.points.size(); ++i)
    nodes.push_back({field.points[i].arclen, field.det_at(i)});
  nodes.push_back({nodes.front().s + 6.0 * kPi, nodes.front().det});

  Real total = 0.0;
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    // subdivide until each step turns by < pi/2
    std::vector<Node> stack{nodes[i + 1]};
    Node cur = nodes[i];
    int depth = 0;
    while (!stack.empty()) {
      Node nxt = stack.back();
      Real dphi = std::arg(nxt.det / cur.det);
      if (std::abs(dphi) < 0.5 * kPi || nxt.s - cur.s < 1e-13) {
        total += dphi;
        cur = nxt;
        stack.pop_back();
        depth = std::max(0, depth - 1);
      } else {
        if (++depth > opt.max_depth)
          throw RefinementExhausted("argument step bound unattainable at depth " +
                                    std::to_string(opt.max_depth));
        Real smid = 0.5 * (cur.s + nxt.s);
        stack.push_back({smid, field.det(point_at_arclen(wrap_arclen(smid)))});
      }
    }
  }
  Real turns = total / (2.0 * kPi);
  long w = std::lround(turns);
  if (std::abs(total - 2.0 * kPi * Real(w)) > opt.closure_tol)
    throw RefinementExhausted("argument accumulation does not close to a multiple of 2 pi");
  return {w, -w};
}

bool local_invertibility_at_zero(const SymbolField& field, const FredholmOptions& opt) {
  Real best = std::numeric_limits<Real>::infinity();
  Real s_best = 0.0;
  for (size_t i = 0; i < field.points.size(); ++i) {
    if (field.points[i].leg != RectanglePoint::Leg::Gamma1) continue;
    Real v = std::abs(field.det_at(i));
    if (v < best) { best = v; s_best = field.points[i].arclen; }
  }
  if (!std::isfinite(best)) throw InputError("field has no Gamma1 samples");
  Real lo = std::max(0.0, s_best - 0.5), hi = std::min(2.0 * kPi, s_best + 0.5);
  for (int depth = 0; depth < 40; ++depth) {
    Real prev = best;
    Real smin = s_best;
    for (int j = 0; j <= 9; ++j) {
      Real sp = lo + (hi - lo) * Real(j) / 9;
      Real v = std::abs(field.det(point_at_arclen(sp)));
      if (v < best) { best = v; smin = sp; }
    }
    Real w = (hi - lo) / 9;
    lo = std::max(0.0, smin - w);
    hi = std::min(2.0 * kPi, smin + w);
    if (std::abs(prev - best) <= 0.01 * (best + 1e-300) || best < 0.5 * opt.tol_ell) break;
  }
  return best > opt.tol_ell;
}

FredholmReport analyze_field(const SymbolField& field, const FredholmOptions& opt) {
  FredholmReport rep;
  auto [min_det, elliptic] = ellipticity(field, opt);
  rep.min_abs_det = min_det;
  rep.elliptic = elliptic;
  if (elliptic) {
    auto [w, idx] = winding_index(field, opt);
    rep.winding = w;
    rep.index = idx;
  }
  rep.locally_invertible_at_zero = local_invertibility_at_zero(field, opt);
  return rep;
}

}  // namespace mellin
