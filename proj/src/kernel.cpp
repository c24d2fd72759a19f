// SPDX-License-Identifier: Apache-2.0
#include "unclogic/kernel.hpp"

#include <cassert>
#include <cmath>

namespace unclogic {

double lucas_and(double a, double b, double rho) {
  assert(is_unit_prob(a) && is_unit_prob(b) && is_rho(rho));
  return a * b + rho * std::sqrt(a * (1.0 - a) * b * (1.0 - b));
}

UnitInterval frechet_and(double a, double b) {
  assert(is_unit_prob(a) && is_unit_prob(b));
  return {frechet_lo(a, b), frechet_hi(a, b)};
}

RhoInterval rho_feasible(double a, double b) {
  assert(is_unit_prob(a) && is_unit_prob(b));
  const double denom = std::sqrt(a * (1.0 - a) * b * (1.0 - b));
  if (denom == 0.0) return RhoInterval::full();
  // Clamp against floating-point overshoot; mathematically already in [-1,1].
  double lo = (frechet_lo(a, b) - a * b) / denom;
  double hi = (frechet_hi(a, b) - a * b) / denom;
  if (lo < -1.0) lo = -1.0;
  if (hi > 1.0) hi = 1.0;
  return {lo, hi};
}

double c_and(double a, double b, double rho) {
  assert(is_unit_prob(a) && is_unit_prob(b) && is_rho(rho));
  if (a == 0.0 || a == 1.0 || b == 0.0 || b == 1.0) return a * b;
  const RhoInterval s = rho_feasible(a, b);
  if (rho <= s.lo) return frechet_lo(a, b);
  if (rho >= s.hi) return frechet_hi(a, b);
  return lucas_and(a, b, rho);
}

double c_and_partial_u(double u, double v, double rho) {
  assert(is_unit_prob(u) && is_unit_prob(v) && is_rho(rho));
  const RhoInterval s = rho_feasible(u, v);
  if (rho <= s.lo) return 0.0;
  if (rho >= s.hi) return 1.0;
  if (u == 0.0 || u == 1.0 || v == 0.0 || v == 1.0)
    throw std::domain_error("c_and_partial_u: interior branch at a degenerate marginal");
  const double root = std::sqrt(u * v * (1.0 - u) * (1.0 - v));
  return v + rho * (v * (1.0 - u) * (1.0 - v) - u * v * (1.0 - v)) / (2.0 * root);
}

}  // namespace unclogic
