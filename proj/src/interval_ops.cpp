// SPDX-License-Identifier: Apache-2.0
#include "unclogic/interval_ops.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "unclogic/kernel.hpp"

namespace unclogic {

UnitInterval and_i(UnitInterval u, UnitInterval v, RhoInterval rho) {
  return {c_and(u.lo, v.lo, rho.lo), c_and(u.hi, v.hi, rho.hi)};
}

namespace {

double xor_val(double a, double b, double rho) {
  return a + b - 2.0 * c_and(a, b, rho);
}

struct Segment {
  double a0, b0;  // start point
  double da, db;  // direction; point(t) = (a0 + t*da, b0 + t*db), t in [0,1]
};

// Interior critical points of the Lucas branch of xor along a segment with
// one coordinate fixed. For fixed a = a0 and variable b the stationarity
// condition is (1-2b)/sqrt(b(1-b)) = (1-2a0)/(rho*sqrt(a0(1-a0))), a quadratic
// in b after squaring.
void lucas_edge_criticals(double fixed, double rho, std::vector<double>& out) {
  if (rho == 0.0 || fixed <= 0.0 || fixed >= 1.0) return;
  const double k = (1.0 - 2.0 * fixed) / (rho * std::sqrt(fixed * (1.0 - fixed)));
  const double disc = 1.0 - 4.0 / (4.0 + k * k);
  if (disc < 0.0) return;
  const double root = std::sqrt(disc);
  for (double b : {0.5 * (1.0 - root), 0.5 * (1.0 + root)}) {
    if (b <= 0.0 || b >= 1.0) continue;
    // discard the spurious root introduced by squaring
    if ((1.0 - 2.0 * b) * k < 0.0) continue;
    out.push_back(b);
  }
}

void add_t(std::vector<double>& ts, double t) {
  if (t > 0.0 && t < 1.0) ts.push_back(t);
}

// Bisect rho_bound(p(t)) - rho between bracketing ts.
template <typename F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void scan_segment(const Segment& s, double rho, double& mn, double& mx) {
  auto at = [&](double t) {
    const double a = std::clamp(s.a0 + t * s.da, 0.0, 1.0);
    const double b = std::clamp(s.b0 + t * s.db, 0.0, 1.0);
    return xor_val(a, b, rho);
  };

  std::vector<double> ts;
  ts.reserve(96);
  constexpr int kGrid = 64;
  for (int i = 0; i <= kGrid; ++i) ts.push_back(static_cast<double>(i) / kGrid);

  // Lucas-branch stationary points.
  if (s.da == 0.0 && s.db != 0.0) {
    std::vector<double> bs;
    lucas_edge_criticals(s.a0, rho, bs);
    for (double b : bs) add_t(ts, (b - s.b0) / s.db);
  } else if (s.db == 0.0 && s.da != 0.0) {
    std::vector<double> as;
    lucas_edge_criticals(s.b0, rho, as);
    for (double a : as) add_t(ts, (a - s.a0) / s.da);
  } else if (s.da != 0.0) {
    // diagonal / anti-diagonal: the Lucas piece is symmetric with its
    // stationary point at a = 1/2
    add_t(ts, (0.5 - s.a0) / s.da);
  }

  // Kinks of the clamped pieces: crossings with a = b and a + b = 1.
  if (s.da != s.db) add_t(ts, (s.b0 - s.a0) / (s.da - s.db));
  if (s.da + s.db != 0.0) add_t(ts, (1.0 - s.a0 - s.b0) / (s.da + s.db));

  // Branch boundaries rho_lo(p(t)) = rho and rho_hi(p(t)) = rho.
  auto flo = [&](double t) {
    return rho_feasible(std::clamp(s.a0 + t * s.da, 0.0, 1.0),
                        std::clamp(s.b0 + t * s.db, 0.0, 1.0)).lo - rho;
  };
  auto fhi = [&](double t) {
    return rho_feasible(std::clamp(s.a0 + t * s.da, 0.0, 1.0),
                        std::clamp(s.b0 + t * s.db, 0.0, 1.0)).hi - rho;
  };
  for (int i = 0; i < kGrid; ++i) {
    const double t0 = static_cast<double>(i) / kGrid;
    const double t1 = static_cast<double>(i + 1) / kGrid;
    if ((flo(t0) <= 0.0) != (flo(t1) <= 0.0)) add_t(ts, bisect(flo, t0, t1));
    if ((fhi(t0) <= 0.0) != (fhi(t1) <= 0.0)) add_t(ts, bisect(fhi, t0, t1));
  }

  for (double t : ts) {
    const double z = at(std::clamp(t, 0.0, 1.0));
    mn = std::min(mn, z);
    mx = std::max(mx, z);
  }
}

// Extrema of xor over the box at fixed rho. Extrema occur on the box edges,
// on the diagonal a = b, or on the anti-diagonal a + b = 1: the interior
// Lucas stationary point (1/2, 1/2) is a saddle, and the clamped pieces vary
// along (1,1)/(1,-1) only, with ridges exactly on those two lines.
void xor_extrema_box(UnitInterval u, UnitInterval v, double rho, double& mn,
                     double& mx) {
  mn = 1.0;
  mx = 0.0;
  const Segment edges[4] = {
      {u.lo, v.lo, 0.0, v.hi - v.lo},
      {u.hi, v.lo, 0.0, v.hi - v.lo},
      {u.lo, v.lo, u.hi - u.lo, 0.0},
      {u.lo, v.hi, u.hi - u.lo, 0.0},
  };
  for (const Segment& e : edges) scan_segment(e, rho, mn, mx);

  const double dlo = std::max(u.lo, v.lo), dhi = std::min(u.hi, v.hi);
  if (dlo <= dhi) scan_segment({dlo, dlo, dhi - dlo, dhi - dlo}, rho, mn, mx);

  const double alo = std::max(u.lo, 1.0 - v.hi), ahi = std::min(u.hi, 1.0 - v.lo);
  if (alo <= ahi)
    scan_segment({alo, 1.0 - alo, ahi - alo, -(ahi - alo)}, rho, mn, mx);
}

UnitInterval xor_i(UnitInterval u, UnitInterval v, RhoInterval rho) {
  // xor is non-increasing in rho, so the maximum lives at rho.lo and the
  // minimum at rho.hi
  double mn, mx;
  xor_extrema_box(u, v, rho.lo, mn, mx);
  if (rho.hi != rho.lo) {
    double mx_unused;
    xor_extrema_box(u, v, rho.hi, mn, mx_unused);
  }
  return {std::clamp(mn, 0.0, 1.0), std::clamp(mx, 0.0, 1.0)};
}

}  // namespace

UnitInterval apply_op_i(OpCode op, UnitInterval u, UnitInterval v, RhoInterval rho) {
  const OpShape s = op_shape(op);
  UnitInterval z{0.0, 0.0};
  switch (s.base) {
    case OpShape::Base::Zero: z = {0.0, 0.0}; break;
    case OpShape::Base::One: z = {1.0, 1.0}; break;
    case OpShape::Base::ProjA: z = u; break;
    case OpShape::Base::ProjB: z = v; break;
    case OpShape::Base::AndForm: {
      const UnitInterval x = s.complement_a ? complement(u) : u;
      const UnitInterval y = s.complement_b ? complement(v) : v;
      z = and_i(x, y, rho_sign(s) < 0 ? neg_rho(rho) : rho);
      break;
    }
    case OpShape::Base::XorForm: z = xor_i(u, v, rho); break;
  }
  return s.complement_out ? complement(z) : z;
}

IntervalJointTable joint_i(UnitInterval u, UnitInterval v, RhoInterval rho) {
  const RhoInterval nr = neg_rho(rho);
  return {and_i(u, v, rho), and_i(u, complement(v), nr),
          and_i(complement(u), v, nr), and_i(complement(u), complement(v), rho)};
}

}  // namespace unclogic
