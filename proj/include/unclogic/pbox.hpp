// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unclogic/boolean_ops.hpp"
#include "unclogic/types.hpp"

namespace unclogic {

/// Upper-level dependence between the distributions characterising two
/// uncertain probabilities. FrechetUnknown is a convolution mode (all
/// copulas at once), not a pointwise copula.
struct CopulaSpec {
  enum class Tag { W, Pi, M, Gaussian, FrechetUnknown };
  Tag tag = Tag::Pi;
  double r = 0.0;  // Gaussian parameter, in [-1, 1]

  static CopulaSpec w() { return {Tag::W, 0.0}; }
  static CopulaSpec pi() { return {Tag::Pi, 0.0}; }
  static CopulaSpec m() { return {Tag::M, 0.0}; }
  static CopulaSpec gaussian(double r);
  static CopulaSpec frechet_unknown() { return {Tag::FrechetUnknown, 0.0}; }

  friend bool operator==(const CopulaSpec&, const CopulaSpec&) = default;
};

/// C(u, v). Throws std::domain_error for FrechetUnknown.
double copula_eval(const CopulaSpec& c, double u, double v);

/// Discretised quantile bounds of an uncertain probability on [0,1].
/// Entry i (0-based) sits at probability level (i + 0.5) / N. The lower
/// quantile sequence encodes the upper CDF bound and vice versa.
class PBox {
 public:
  PBox(std::vector<double> q_lo, std::vector<double> q_hi);

  int steps() const { return static_cast<int>(q_lo_.size()); }
  const std::vector<double>& q_lo() const { return q_lo_; }
  const std::vector<double>& q_hi() const { return q_hi_; }
  double level(int i) const { return (i + 0.5) / steps(); }

  /// [min possible value, max possible value].
  UnitInterval support() const { return {q_lo_.front(), q_hi_.back()}; }

  friend bool operator==(const PBox&, const PBox&) = default;

 private:
  std::vector<double> q_lo_, q_hi_;
};

/// Point mass at p.
PBox pbox_point(double p, int n_steps);
/// Vacuous box on an interval (total ignorance inside it).
PBox pbox_interval(UnitInterval u, int n_steps);

/// K-out-of-N confidence box: bounding distributions Beta(k, n-k+1) and
/// Beta(k+1, n-k), with Beta(0, .) a point mass at 0 and Beta(., 0) a point
/// mass at 1.
PBox cbox_kn(long k, long n, int n_steps);

PBox not_pbox(const PBox& x);

/// Re-grid to n_steps levels, rounding outward (lower bound down, upper up).
PBox resample(const PBox& x, int n_steps);

/// Conjunction of two uncertain probabilities: the event correlation rho acts
/// inside each cell image, the copula cxy distributes mass over the level
/// grid. Requires cxy != FrechetUnknown. Output contains the exact
/// convolution (condensation rounds mass outward).
PBox conv_and(const PBox& x, const PBox& y, RhoInterval rho, const CopulaSpec& cxy);
PBox conv_and_serial(const PBox& x, const PBox& y, RhoInterval rho,
                     const CopulaSpec& cxy);

/// Conjunction under unknown upper-level dependence: best-possible bounds
/// over all copulas (quantile-domain tau-convolution with W and its dual).
PBox conv_and_frechet(const PBox& x, const PBox& y, RhoInterval rho);
PBox conv_and_frechet_serial(const PBox& x, const PBox& y, RhoInterval rho);

/// Monotone-decomposable binary ops (And/Or/Nand/Nor/Implies*/Inhibit*)
/// lifted to p-boxes via complement composition with the usual rho sign
/// bookkeeping; cxy == FrechetUnknown routes through conv_and_frechet.
/// Throws std::invalid_argument for Xor/Equiv and non-binary ops.
PBox apply_op_pbox(OpCode op, const PBox& x, const PBox& y, RhoInterval rho,
                   const CopulaSpec& cxy);

/// Bounds on P(value <= t): [share of levels with q_hi <= t,
///                           share of levels with q_lo <= t].
UnitInterval cdf_bounds_at(const PBox& x, double t);

/// CSV with header "level,q_lo,q_hi", one row per level, full precision.
std::string pbox_to_csv(const PBox& x);
PBox pbox_from_csv(std::string_view csv);

/// Two monotone step paths (CDF bounds) with a shaded band on [0,1]x[0,1].
std::string pbox_to_svg(const PBox& x);

}  // namespace unclogic
