// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace unclogic {

/// Standard normal CDF.
double norm_cdf(double x);

/// Standard normal quantile. p in (0,1); returns +/-inf at the endpoints.
double norm_quantile(double p);

/// Bivariate standard normal CDF P(X <= x, Y <= y) with correlation r,
/// Genz (2004) hybrid quadrature. Absolute error around 1e-15.
double bvn_cdf(double x, double y, double r);

/// Quantile of Beta(alpha, beta) at probability p.
double beta_quantile(double p, double alpha, double beta);

}  // namespace unclogic
