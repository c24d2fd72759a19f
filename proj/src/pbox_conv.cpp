// SPDX-License-Identifier: Apache-2.0
//
// Convolution kernels for p-box conjunction. The cell grids are
// embarrassingly parallel; each cell/level writes its own slot, and the
// condensation walk is serial, so the parallel kernels produce bit-identical
// output to the serial references for any thread count.
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "unclogic/kernel.hpp"
#include "unclogic/pbox.hpp"

namespace unclogic {

namespace {

// Copula CDF sampled on the (n+1)x(n+1) level grid.
std::vector<double> copula_grid(const CopulaSpec& cxy, int n, bool parallel) {
  std::vector<double> g(static_cast<std::size_t>(n + 1) * (n + 1));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i <= n; ++i) {
    const double u = static_cast<double>(i) / n;
    for (int j = 0; j <= n; ++j)
      g[static_cast<std::size_t>(i) * (n + 1) + j] =
          copula_eval(cxy, u, static_cast<double>(j) / n);
  }
#ifndef _OPENMP
  (void)parallel;
#endif
  return g;
}

struct Atoms {
  std::vector<double> value;
  std::vector<double> mass;
};

// One quantile bound from a discrete mass distribution. The lower bound reads
// the value where cumulative mass first exceeds the left band edge (i-1)/n,
// the upper where it first reaches the right edge i/n; both roundings push
// the output outward so it contains the exact convolution.
std::vector<double> condense(Atoms atoms, int n, bool lower) {
  std::vector<std::size_t> order(atoms.value.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return atoms.value[a] < atoms.value[b];
  });
  std::vector<double> out(n);
  std::size_t k = 0;
  double cum = atoms.mass[order[0]];
  for (int i = 1; i <= n; ++i) {
    const double thr = lower ? static_cast<double>(i - 1) / n
                             : static_cast<double>(i) / n;
    while (k + 1 < order.size() && (lower ? cum <= thr : cum < thr))
      cum += atoms.mass[order[++k]];
    out[i - 1] = atoms.value[order[k]];
  }
  return out;
}

PBox conv_and_impl(const PBox& x0, const PBox& y0, RhoInterval rho,
                   const CopulaSpec& cxy, bool parallel) {
  if (cxy.tag == CopulaSpec::Tag::FrechetUnknown)
    throw std::invalid_argument("conv_and: use conv_and_frechet for unknown upper-level dependence");
  const PBox& x = x0;
  const PBox y = (y0.steps() == x0.steps()) ? y0 : resample(y0, x0.steps());
  const int n = x.steps();
  const std::size_t nn = static_cast<std::size_t>(n) * n;

  const std::vector<double> cop = copula_grid(cxy, n, parallel);
  auto cell_mass = [&](int i, int j) {
    const std::size_t s = static_cast<std::size_t>(n) + 1;
    const double m = cop[(i + 1) * s + (j + 1)] - cop[(i + 1) * s + j] -
                     cop[i * s + (j + 1)] + cop[i * s + j];
    return m > 0.0 ? m : 0.0;  // clamp quadrature noise
  };

  Atoms lo, hi;
  lo.value.resize(nn);
  lo.mass.resize(nn);
  hi.value.resize(nn);
  hi.mass.resize(nn);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t c = static_cast<std::size_t>(i) * n + j;
      const double m = cell_mass(i, j);
      lo.mass[c] = m;
      hi.mass[c] = m;
      lo.value[c] = c_and(x.q_lo()[i], y.q_lo()[j], rho.lo);
      hi.value[c] = c_and(x.q_hi()[i], y.q_hi()[j], rho.hi);
    }
  }

  const double total = std::accumulate(lo.mass.begin(), lo.mass.end(), 0.0);
  if (std::fabs(total - 1.0) > 1e-9)
    throw std::logic_error("conv_and: copula mass defect " + std::to_string(total - 1.0));

  std::vector<double> q_lo = condense(std::move(lo), n, /*lower=*/true);
  std::vector<double> q_hi = condense(std::move(hi), n, /*lower=*/false);
  return PBox(std::move(q_lo), std::move(q_hi));
}

// Quantile-domain tau-convolution. Upper-CDF-bound quantiles (q_lo) take the
// max of c_and over level splits p1 + p2 = p at rho.lo; lower-CDF-bound
// quantiles (q_hi) take the min over splits p1 + p2 = 1 + p at rho.hi.
// Split sums are rounded outward onto the level grid.
PBox conv_and_frechet_impl(const PBox& x0, const PBox& y0, RhoInterval rho,
                           bool parallel) {
  const PBox& x = x0;
  const PBox y = (y0.steps() == x0.steps()) ? y0 : resample(y0, x0.steps());
  const int n = x.steps();
  std::vector<double> q_lo(n), q_hi(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 1; i <= n; ++i) {
    if (i == 1) {
      q_lo[0] = c_and(x.q_lo()[0], y.q_lo()[0], rho.lo);
    } else {
      double best = 0.0;
      for (int j = std::max(1, i - n); j <= std::min(i - 1, n); ++j) {
        const int k = i - j;
        best = std::max(best, c_and(x.q_lo()[j - 1], y.q_lo()[k - 1], rho.lo));
      }
      q_lo[i - 1] = best;
    }
    if (i == n) {
      q_hi[n - 1] = c_and(x.q_hi()[n - 1], y.q_hi()[n - 1], rho.hi);
    } else {
      double best = 1.0;
      for (int j = i + 1; j <= n; ++j) {
        const int k = n + i + 1 - j;
        best = std::min(best, c_and(x.q_hi()[j - 1], y.q_hi()[k - 1], rho.hi));
      }
      q_hi[i - 1] = best;
    }
  }
#ifndef _OPENMP
  (void)parallel;
#endif
  return PBox(std::move(q_lo), std::move(q_hi));
}

}  // namespace

PBox conv_and(const PBox& x, const PBox& y, RhoInterval rho, const CopulaSpec& cxy) {
  return conv_and_impl(x, y, rho, cxy, true);
}

PBox conv_and_serial(const PBox& x, const PBox& y, RhoInterval rho,
                     const CopulaSpec& cxy) {
  return conv_and_impl(x, y, rho, cxy, false);
}

PBox conv_and_frechet(const PBox& x, const PBox& y, RhoInterval rho) {
  return conv_and_frechet_impl(x, y, rho, true);
}

PBox conv_and_frechet_serial(const PBox& x, const PBox& y, RhoInterval rho) {
  return conv_and_frechet_impl(x, y, rho, false);
}

}  // namespace unclogic
