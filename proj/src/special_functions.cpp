// SPDX-License-Identifier: Apache-2.0
#include "unclogic/special_functions.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <limits>

namespace unclogic {

double norm_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double norm_quantile(double p) {
  if (p <= 0.0) return -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  return -M_SQRT2 * boost::math::erfc_inv(2.0 * p);
}

double beta_quantile(double p, double alpha, double beta) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  return boost::math::ibeta_inv(alpha, beta, p);
}

namespace {

// Gauss-Legendre half-rules (symmetric nodes), Genz (2004).
constexpr double kW6[] = {0.1713244923791705, 0.3607615730481384,
                          0.4679139345726904};
constexpr double kX6[] = {-0.9324695142031522, -0.6612093864662647,
                          -0.2386191860831970};
constexpr double kW12[] = {0.04717533638651177, 0.1069393259953183,
                           0.1600783285433464,  0.2031674267230659,
                           0.2334925365383547,  0.2491470458134029};
constexpr double kX12[] = {-0.9815606342467191, -0.9041172563704750,
                           -0.7699026741943050, -0.5873179542866171,
                           -0.3678314989981802, -0.1252334085114692};
constexpr double kW20[] = {0.01761400713915212, 0.04060142980038694,
                           0.06267204833410906, 0.08327674157670475,
                           0.1019301198172404,  0.1181945319615184,
                           0.1316886384491766,  0.1420961093183820,
                           0.1491729864726037,  0.1527533871307258};
constexpr double kX20[] = {-0.9931285991850949, -0.9639719272779138,
                           -0.9122344282513259, -0.8391169718222188,
                           -0.7463319064601508, -0.6360536807265150,
                           -0.5108670019508271, -0.3737060887154195,
                           -0.2277858511416451, -0.07652652113349733};

// P(X > dh, Y > dk) for standard bivariate normal with correlation r.
double bvnd(double dh, double dk, double r) {
  const double* w;
  const double* x;
  int ng;
  const double ar = std::fabs(r);
  if (ar < 0.3) {
    w = kW6; x = kX6; ng = 3;
  } else if (ar < 0.75) {
    w = kW12; x = kX12; ng = 6;
  } else {
    w = kW20; x = kX20; ng = 10;
  }

  double h = dh;
  double k = dk;
  double hk = h * k;
  double bvn = 0.0;

  if (ar < 0.925) {
    if (ar > 0.0) {
      const double hs = (h * h + k * k) / 2.0;
      const double asr = std::asin(r);
      for (int i = 0; i < ng; ++i) {
        for (int is = -1; is <= 1; is += 2) {
          const double sn = std::sin(asr * (is * x[i] + 1.0) / 2.0);
          bvn += w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
        }
      }
      bvn = bvn * asr / (4.0 * M_PI);
    }
    bvn += norm_cdf(-h) * norm_cdf(-k);
    return bvn;
  }

  if (r < 0.0) {
    k = -k;
    hk = -hk;
  }
  if (ar < 1.0) {
    const double as = (1.0 - r) * (1.0 + r);
    double a = std::sqrt(as);
    const double bs = (h - k) * (h - k);
    const double c = (4.0 - hk) / 8.0;
    const double d = (12.0 - hk) / 16.0;
    double asr = -(bs / as + hk) / 2.0;
    if (asr > -100.0)
      bvn = a * std::exp(asr) *
            (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
    if (-hk < 100.0) {
      const double b = std::sqrt(bs);
      bvn -= std::exp(-hk / 2.0) * std::sqrt(2.0 * M_PI) * norm_cdf(-b / a) * b *
             (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
    }
    a /= 2.0;
    for (int i = 0; i < ng; ++i) {
      for (int is = -1; is <= 1; is += 2) {
        const double xs = a * (is * x[i] + 1.0) * a * (is * x[i] + 1.0);
        const double rs = std::sqrt(1.0 - xs);
        asr = -(bs / xs + hk) / 2.0;
        if (asr > -100.0) {
          const double sp = 1.0 + c * xs * (1.0 + d * xs);
          const double ep = std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs;
          bvn += a * w[i] * std::exp(asr) * (ep - sp);
        }
      }
    }
    bvn = -bvn / (2.0 * M_PI);
  }
  if (r > 0.0) {
    bvn += norm_cdf(-std::max(h, k));
  } else {
    bvn = -bvn;
    if (k > h) {
      // difference of CDFs evaluated in the lower tail for accuracy
      if (h >= 0.0)
        bvn += norm_cdf(-h) - norm_cdf(-k);
      else
        bvn += norm_cdf(k) - norm_cdf(h);
    }
  }
  return bvn;
}

}  // namespace

double bvn_cdf(double x, double y, double r) {
  if (r >= 1.0) return norm_cdf(std::min(x, y));
  if (r <= -1.0) return std::max(norm_cdf(x) + norm_cdf(y) - 1.0, 0.0);
  const double v = bvnd(-x, -y, r);
  return std::min(1.0, std::max(0.0, v));
}

}  // namespace unclogic
