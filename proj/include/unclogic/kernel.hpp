// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "unclogic/types.hpp"

namespace unclogic {

/// Raw correlated conjunction a*b + rho*sqrt(a(1-a)b(1-b)).
/// May fall outside [0,1] for infeasible (a, b, rho) combinations; no clamping.
double lucas_and(double a, double b, double rho);

/// Best-possible conjunction bounds under unknown dependence:
/// [max(a+b-1, 0), min(a, b)].
UnitInterval frechet_and(double a, double b);

/// Pearson correlations attainable by a bivariate Bernoulli with marginals
/// (a, b). Degenerate marginals (a or b in {0,1}) give the full [-1,1]:
/// the conjunction interval collapses, so every rho acts alike.
RhoInterval rho_feasible(double a, double b);

/// Correlated conjunction clamped to the Frechet bounds: the copula family
/// C_rho. Returns max(a+b-1,0) below the feasible range, min(a,b) above it,
/// lucas_and(a,b,rho) inside. Branch comparisons are exact (the three branches
/// agree at the boundaries).
double c_and(double a, double b, double rho);

/// dC_rho(u,v)/du with the same branch selection as c_and: 0 below the
/// feasible range, 1 above it, closed form inside.
/// Throws std::domain_error when the interior branch is selected at
/// u in {0,1} or v in {0,1} (the square-root denominator vanishes).
double c_and_partial_u(double u, double v, double rho);

// Degenerate marginals short-circuit so the identities W(1,b) = b and
// W(a,1) = a hold exactly in floating point.
inline double frechet_lo(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  if (a == 1.0) return b;
  if (b == 1.0) return a;
  return a + b - 1.0 > 0.0 ? a + b - 1.0 : 0.0;
}
inline double frechet_hi(double a, double b) { return a < b ? a : b; }

}  // namespace unclogic
