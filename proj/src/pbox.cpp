// SPDX-License-Identifier: Apache-2.0
#include "unclogic/pbox.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "unclogic/kernel.hpp"
#include "unclogic/special_functions.hpp"

namespace unclogic {

CopulaSpec CopulaSpec::gaussian(double r) {
  if (!is_rho(r))
    throw std::invalid_argument("CopulaSpec: Gaussian parameter outside [-1,1]");
  return {Tag::Gaussian, r};
}

double copula_eval(const CopulaSpec& c, double u, double v) {
  switch (c.tag) {
    case CopulaSpec::Tag::W: return std::max(u + v - 1.0, 0.0);
    case CopulaSpec::Tag::Pi: return u * v;
    case CopulaSpec::Tag::M: return std::min(u, v);
    case CopulaSpec::Tag::Gaussian:
      if (u <= 0.0 || v <= 0.0) return 0.0;
      if (u >= 1.0) return v;
      if (v >= 1.0) return u;
      return bvn_cdf(norm_quantile(u), norm_quantile(v), c.r);
    case CopulaSpec::Tag::FrechetUnknown:
      throw std::domain_error("copula_eval: FrechetUnknown is a convolution mode, not a pointwise copula");
  }
  throw std::logic_error("copula_eval: bad tag");
}

PBox::PBox(std::vector<double> q_lo, std::vector<double> q_hi)
    : q_lo_(std::move(q_lo)), q_hi_(std::move(q_hi)) {
  if (q_lo_.empty() || q_lo_.size() != q_hi_.size())
    throw std::invalid_argument("PBox: need equal, non-empty bound sequences");
  for (std::size_t i = 0; i < q_lo_.size(); ++i) {
    if (!is_unit_prob(q_lo_[i]) || !is_unit_prob(q_hi_[i]) || q_lo_[i] > q_hi_[i])
      throw std::invalid_argument("PBox: bounds must satisfy 0 <= q_lo <= q_hi <= 1");
    if (i > 0 && (q_lo_[i] < q_lo_[i - 1] || q_hi_[i] < q_hi_[i - 1]))
      throw std::invalid_argument("PBox: quantile bounds must be non-decreasing");
  }
}

PBox pbox_point(double p, int n_steps) {
  if (!is_unit_prob(p)) throw std::invalid_argument("pbox_point: p outside [0,1]");
  if (n_steps < 1) throw std::invalid_argument("pbox_point: n_steps < 1");
  return PBox(std::vector<double>(n_steps, p), std::vector<double>(n_steps, p));
}

PBox pbox_interval(UnitInterval u, int n_steps) {
  if (n_steps < 1) throw std::invalid_argument("pbox_interval: n_steps < 1");
  return PBox(std::vector<double>(n_steps, u.lo), std::vector<double>(n_steps, u.hi));
}

PBox cbox_kn(long k, long n, int n_steps) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("cbox_kn: need 0 <= k <= n, n >= 1");
  if (n_steps < 1) throw std::invalid_argument("cbox_kn: n_steps < 1");
  std::vector<double> q_lo(n_steps), q_hi(n_steps);
  for (int i = 0; i < n_steps; ++i) {
    const double p = (i + 0.5) / n_steps;
    q_lo[i] = (k == 0) ? 0.0 : beta_quantile(p, double(k), double(n - k + 1));
    q_hi[i] = (k == n) ? 1.0 : beta_quantile(p, double(k + 1), double(n - k));
  }
  return PBox(std::move(q_lo), std::move(q_hi));
}

PBox not_pbox(const PBox& x) {
  const int n = x.steps();
  std::vector<double> q_lo(n), q_hi(n);
  for (int i = 0; i < n; ++i) {
    q_lo[i] = 1.0 - x.q_hi()[n - 1 - i];
    q_hi[i] = 1.0 - x.q_lo()[n - 1 - i];
  }
  return PBox(std::move(q_lo), std::move(q_hi));
}

PBox resample(const PBox& x, int n_steps) {
  if (n_steps < 1) throw std::invalid_argument("resample: n_steps < 1");
  if (n_steps == x.steps()) return x;
  const int n = x.steps();
  std::vector<double> q_lo(n_steps), q_hi(n_steps);
  for (int i = 0; i < n_steps; ++i) {
    const double p = (i + 0.5) / n_steps;
    // level index below/above p on the source grid, clamped
    const int j_lo = std::clamp(static_cast<int>(std::floor(p * n + 0.5)), 1, n);
    const int j_hi = std::clamp(static_cast<int>(std::ceil(p * n + 0.5)), 1, n);
    q_lo[i] = x.q_lo()[j_lo - 1];
    q_hi[i] = x.q_hi()[j_hi - 1];
  }
  return PBox(std::move(q_lo), std::move(q_hi));
}

PBox apply_op_pbox(OpCode op, const PBox& x, const PBox& y, RhoInterval rho,
                   const CopulaSpec& cxy) {
  const OpShape s = op_shape(op);
  if (s.base != OpShape::Base::AndForm)
    throw std::invalid_argument("apply_op_pbox: op must be a monotone-decomposable binary operation");
  const PBox a = s.complement_a ? not_pbox(x) : x;
  const PBox b = s.complement_b ? not_pbox(y) : y;
  const RhoInterval r = rho_sign(s) < 0 ? neg_rho(rho) : rho;
  PBox z = (cxy.tag == CopulaSpec::Tag::FrechetUnknown)
               ? conv_and_frechet(a, b, r)
               : conv_and(a, b, r, cxy);
  return s.complement_out ? not_pbox(z) : z;
}

UnitInterval cdf_bounds_at(const PBox& x, double t) {
  const int n = x.steps();
  int n_hi = 0, n_lo = 0;
  for (int i = 0; i < n; ++i) {
    if (x.q_hi()[i] <= t) ++n_hi;
    if (x.q_lo()[i] <= t) ++n_lo;
  }
  return {static_cast<double>(n_hi) / n, static_cast<double>(n_lo) / n};
}

std::string pbox_to_csv(const PBox& x) {
  std::string out = "level,q_lo,q_hi\n";
  for (int i = 0; i < x.steps(); ++i) {
    out += fmt_double(x.level(i));
    out += ',';
    out += fmt_double(x.q_lo()[i]);
    out += ',';
    out += fmt_double(x.q_hi()[i]);
    out += '\n';
  }
  return out;
}

PBox pbox_from_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "level,q_lo,q_hi")
    throw std::invalid_argument("pbox_from_csv: bad header");
  std::vector<double> q_lo, q_hi;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double lev, lo, hi;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &lev, &lo, &hi) != 3)
      throw std::invalid_argument("pbox_from_csv: bad row: " + line);
    q_lo.push_back(lo);
    q_hi.push_back(hi);
  }
  return PBox(std::move(q_lo), std::move(q_hi));
}

namespace {

// step path through (q[i], level boundaries); x = value, y = cumulative prob
std::string step_path(const std::vector<double>& q, double w, double h) {
  const int n = static_cast<int>(q.size());
  char buf[64];
  std::string d;
  std::snprintf(buf, sizeof buf, "M %.2f %.2f", q[0] * w, h);
  d += buf;
  for (int i = 0; i < n; ++i) {
    const double y = h - (static_cast<double>(i + 1) / n) * h;
    std::snprintf(buf, sizeof buf, " V %.2f", y);
    d += buf;
    if (i + 1 < n && q[i + 1] != q[i]) {
      std::snprintf(buf, sizeof buf, " H %.2f", q[i + 1] * w);
      d += buf;
    }
  }
  return d;
}

}  // namespace

std::string pbox_to_svg(const PBox& x) {
  constexpr double kW = 480.0, kH = 480.0, kPad = 40.0;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW + 2 * kPad
      << "\" height=\"" << kH + 2 * kPad << "\" viewBox=\"0 0 " << kW + 2 * kPad
      << " " << kH + 2 * kPad << "\">\n";
  svg << "<g transform=\"translate(" << kPad << "," << kPad << ")\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kW << "\" height=\"" << kH
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  // shaded band: upper CDF bound (from q_lo) left, lower bound (q_hi) right
  const std::string left = step_path(x.q_lo(), kW, kH);
  std::string right;
  {
    // reverse traversal of the q_hi step path to close the band
    std::vector<double> rq(x.q_hi().rbegin(), x.q_hi().rend());
    char buf[64];
    const int n = x.steps();
    std::snprintf(buf, sizeof buf, "L %.2f %.2f", rq[0] * kW, 0.0);
    right += buf;
    for (int i = 0; i < n; ++i) {
      const double y = kH - (static_cast<double>(n - 1 - i) / n) * kH;
      std::snprintf(buf, sizeof buf, " V %.2f", y);
      right += buf;
      if (i + 1 < n && rq[i + 1] != rq[i]) {
        std::snprintf(buf, sizeof buf, " H %.2f", rq[i + 1] * kW);
        right += buf;
      }
    }
  }
  svg << "<path d=\"" << left << " " << right
      << " Z\" fill=\"lightsteelblue\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
  svg << "<path d=\"" << left << "\" fill=\"none\" stroke=\"navy\" stroke-width=\"1.5\"/>\n";
  svg << "<path d=\"" << step_path(x.q_hi(), kW, kH)
      << "\" fill=\"none\" stroke=\"navy\" stroke-width=\"1.5\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double f = tick / 4.0;
    svg << "<text x=\"" << f * kW << "\" y=\"" << kH + 16
        << "\" font-size=\"10\" text-anchor=\"middle\">" << f << "</text>\n";
    svg << "<text x=\"-6\" y=\"" << kH - f * kH + 3
        << "\" font-size=\"10\" text-anchor=\"end\">" << f << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace unclogic
