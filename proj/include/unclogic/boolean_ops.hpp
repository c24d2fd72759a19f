// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "unclogic/types.hpp"

namespace unclogic {

/// The 16 binary/unary Boolean operations.
enum class OpCode {
  And,
  Or,
  Nand,
  Nor,
  Xor,
  Equiv,
  ImpliesAB,
  ImpliesBA,
  InhibitAB,
  InhibitBA,
  NotA,
  NotB,
  IdentA,
  IdentB,
  Zero,
  One,
};

inline constexpr std::array<OpCode, 16> kAllOps = {
    OpCode::And,       OpCode::Or,        OpCode::Nand,      OpCode::Nor,
    OpCode::Xor,       OpCode::Equiv,     OpCode::ImpliesAB, OpCode::ImpliesBA,
    OpCode::InhibitAB, OpCode::InhibitBA, OpCode::NotA,      OpCode::NotB,
    OpCode::IdentA,    OpCode::IdentB,    OpCode::Zero,      OpCode::One,
};

std::string_view op_name(OpCode op);
std::optional<OpCode> op_from_name(std::string_view name);

/// How an operation decomposes into the and/not primitives. The complement
/// flags carry the correlation-sign bookkeeping: each complemented input
/// occurrence negates rho once inside the c_and call.
struct OpShape {
  enum class Base { Zero, One, ProjA, ProjB, AndForm, XorForm };
  Base base;
  bool complement_a = false;
  bool complement_b = false;
  bool complement_out = false;
};

OpShape op_shape(OpCode op);

/// +1 if the op's c_and call sees the original rho, -1 if negated once.
inline int rho_sign(const OpShape& s) {
  return (s.complement_a != s.complement_b) ? -1 : +1;
}

inline double not_p(double a) { return 1.0 - a; }

/// Complementing one event of a pair negates the correlation.
inline RhoInterval neg_rho(RhoInterval r) { return {-r.hi, -r.lo}; }

/// 1 - c_and(1-a, 1-b, rho); rho unchanged (both inputs complemented).
double or_p(double a, double b, double rho);

/// P(exactly one of A, B) = p10 + p01 = a + b - 2 c_and(a, b, rho).
/// Computed from the joint table, not the (A or B) and (A nand B) expansion:
/// those compound operands share inputs, so their correlation is not the
/// input rho.
double xor_p(double a, double b, double rho);

double apply_op(OpCode op, double a, double b, double rho);

/// 2x2 joint distribution of a bivariate Bernoulli pair.
struct JointTable {
  double p11, p10, p01, p00;
};

JointTable joint_bernoulli(double a, double b, double rho);

using BitVector = std::vector<std::uint8_t>;

struct BitPairSample {
  BitVector a;
  BitVector b;
};

/// n i.i.d. draws from joint_bernoulli(a, b, rho). Counter-based generator:
/// reproducible for a fixed seed and independent of thread schedule.
BitPairSample sample_pairs(double a, double b, double rho, std::size_t n,
                           std::uint64_t seed);
BitPairSample sample_pairs_serial(double a, double b, double rho, std::size_t n,
                                  std::uint64_t seed);

/// Sample Pearson correlation of two equal-length 0/1 sequences.
/// Throws std::domain_error if either sequence is constant.
double sample_pearson(const BitVector& x, const BitVector& y);

namespace detail {
/// Value i of the splitmix64 stream for the given seed, folded to [0,1).
double uniform01_at(std::uint64_t seed, std::uint64_t i);
}  // namespace detail

}  // namespace unclogic
