// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "unclogic/boolean_ops.hpp"
#include "unclogic/types.hpp"

namespace unclogic {

/// Interval conjunction by endpoint evaluation:
/// [c_and(u.lo, v.lo, rho.lo), c_and(u.hi, v.hi, rho.hi)].
/// Valid because c_and is non-decreasing in all three arguments.
UnitInterval and_i(UnitInterval u, UnitInterval v, RhoInterval rho);

/// Any Table-row operation on interval inputs. Monotone-decomposable ops use
/// endpoint evaluation through the complement/sign metadata; XOR and EQUIV
/// (non-monotone in the marginals) get a rigorous outer bound from a candidate
/// scan over the box edges, the diagonal and the anti-diagonal.
UnitInterval apply_op_i(OpCode op, UnitInterval u, UnitInterval v, RhoInterval rho);

/// Interval-valued 2x2 joint distribution of a bivariate Bernoulli pair.
struct IntervalJointTable {
  UnitInterval p11, p10, p01, p00;
};

IntervalJointTable joint_i(UnitInterval u, UnitInterval v, RhoInterval rho);

}  // namespace unclogic
