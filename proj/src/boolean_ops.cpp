// SPDX-License-Identifier: Apache-2.0
#include "unclogic/boolean_ops.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "unclogic/kernel.hpp"

namespace unclogic {

std::string_view op_name(OpCode op) {
  switch (op) {
    case OpCode::And: return "and";
    case OpCode::Or: return "or";
    case OpCode::Nand: return "nand";
    case OpCode::Nor: return "nor";
    case OpCode::Xor: return "xor";
    case OpCode::Equiv: return "equiv";
    case OpCode::ImpliesAB: return "implies-ab";
    case OpCode::ImpliesBA: return "implies-ba";
    case OpCode::InhibitAB: return "inhibit-ab";
    case OpCode::InhibitBA: return "inhibit-ba";
    case OpCode::NotA: return "not-a";
    case OpCode::NotB: return "not-b";
    case OpCode::IdentA: return "ident-a";
    case OpCode::IdentB: return "ident-b";
    case OpCode::Zero: return "zero";
    case OpCode::One: return "one";
  }
  return "?";
}

std::optional<OpCode> op_from_name(std::string_view name) {
  for (OpCode op : kAllOps)
    if (op_name(op) == name) return op;
  return std::nullopt;
}

OpShape op_shape(OpCode op) {
  using B = OpShape::Base;
  switch (op) {
    case OpCode::And:       return {B::AndForm, false, false, false};
    case OpCode::Or:        return {B::AndForm, true, true, true};
    case OpCode::Nand:      return {B::AndForm, false, false, true};
    case OpCode::Nor:       return {B::AndForm, true, true, false};
    case OpCode::Xor:       return {B::XorForm, false, false, false};
    case OpCode::Equiv:     return {B::XorForm, false, false, true};
    case OpCode::ImpliesAB: return {B::AndForm, false, true, true};
    case OpCode::ImpliesBA: return {B::AndForm, true, false, true};
    case OpCode::InhibitAB: return {B::AndForm, false, true, false};
    case OpCode::InhibitBA: return {B::AndForm, true, false, false};
    case OpCode::NotA:      return {B::ProjA, false, false, true};
    case OpCode::NotB:      return {B::ProjB, false, false, true};
    case OpCode::IdentA:    return {B::ProjA, false, false, false};
    case OpCode::IdentB:    return {B::ProjB, false, false, false};
    case OpCode::Zero:      return {B::Zero, false, false, false};
    case OpCode::One:       return {B::One, false, false, false};
  }
  throw std::logic_error("op_shape: bad OpCode");
}

double or_p(double a, double b, double rho) {
  return 1.0 - c_and(1.0 - a, 1.0 - b, rho);
}

double xor_p(double a, double b, double rho) {
  return a + b - 2.0 * c_and(a, b, rho);
}

double apply_op(OpCode op, double a, double b, double rho) {
  const OpShape s = op_shape(op);
  double v = 0.0;
  switch (s.base) {
    case OpShape::Base::Zero: v = 0.0; break;
    case OpShape::Base::One: v = 1.0; break;
    case OpShape::Base::ProjA: v = a; break;
    case OpShape::Base::ProjB: v = b; break;
    case OpShape::Base::AndForm: {
      const double x = s.complement_a ? 1.0 - a : a;
      const double y = s.complement_b ? 1.0 - b : b;
      v = c_and(x, y, rho_sign(s) * rho);
      break;
    }
    case OpShape::Base::XorForm: v = xor_p(a, b, rho); break;
  }
  return s.complement_out ? 1.0 - v : v;
}

JointTable joint_bernoulli(double a, double b, double rho) {
  return {c_and(a, b, rho), c_and(a, 1.0 - b, -rho), c_and(1.0 - a, b, -rho),
          c_and(1.0 - a, 1.0 - b, rho)};
}

namespace detail {

double uniform01_at(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace detail

namespace {

BitPairSample sample_pairs_impl(double a, double b, double rho, std::size_t n,
                                std::uint64_t seed, bool parallel) {
  if (n < 1) throw std::invalid_argument("sample_pairs: n must be >= 1");
  const JointTable jt = joint_bernoulli(a, b, rho);
  const double t11 = jt.p11;
  const double t10 = jt.p11 + jt.p10;
  const double t01 = jt.p11 + jt.p10 + jt.p01;
  BitPairSample out;
  out.a.resize(n);
  out.b.resize(n);
  const std::int64_t sn = static_cast<std::int64_t>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::int64_t i = 0; i < sn; ++i) {
    const double u = detail::uniform01_at(seed, static_cast<std::uint64_t>(i));
    std::uint8_t bit_a, bit_b;
    if (u < t11) {
      bit_a = 1; bit_b = 1;
    } else if (u < t10) {
      bit_a = 1; bit_b = 0;
    } else if (u < t01) {
      bit_a = 0; bit_b = 1;
    } else {
      bit_a = 0; bit_b = 0;
    }
    out.a[static_cast<std::size_t>(i)] = bit_a;
    out.b[static_cast<std::size_t>(i)] = bit_b;
  }
#ifndef _OPENMP
  (void)parallel;
#endif
  return out;
}

}  // namespace

BitPairSample sample_pairs(double a, double b, double rho, std::size_t n,
                           std::uint64_t seed) {
  return sample_pairs_impl(a, b, rho, n, seed, true);
}

BitPairSample sample_pairs_serial(double a, double b, double rho, std::size_t n,
                                  std::uint64_t seed) {
  return sample_pairs_impl(a, b, rho, n, seed, false);
}

double sample_pearson(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("sample_pearson: length mismatch");
  if (x.empty()) throw std::invalid_argument("sample_pearson: empty input");
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  std::int64_t sx = 0, sy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxy += static_cast<std::int64_t>(x[i]) * y[i];
  }
  const std::int64_t vx = n * sx - sx * sx;
  const std::int64_t vy = n * sy - sy * sy;
  if (vx == 0 || vy == 0)
    throw std::domain_error("sample_pearson: constant sequence has no correlation");
  const double num = static_cast<double>(n * sxy - sx * sy);
  return num / (std::sqrt(static_cast<double>(vx)) * std::sqrt(static_cast<double>(vy)));
}

}  // namespace unclogic
