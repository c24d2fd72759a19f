// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "unclogic/boolean_ops.hpp"
#include "unclogic/kernel.hpp"

using namespace unclogic;

namespace {

// the two correlated coin-toss sequences used as a fixture
const BitVector kVecA = {0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1};
const BitVector kVecB = {0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1};

// Table row -> expected bit for (a, b) in {(1,1),(1,0),(0,1),(0,0)}
struct TruthRow {
  OpCode op;
  int bits[4];
};
const TruthRow kTruth[] = {
    {OpCode::And, {1, 0, 0, 0}},       {OpCode::Or, {1, 1, 1, 0}},
    {OpCode::Nand, {0, 1, 1, 1}},      {OpCode::Nor, {0, 0, 0, 1}},
    {OpCode::Xor, {0, 1, 1, 0}},       {OpCode::Equiv, {1, 0, 0, 1}},
    {OpCode::ImpliesAB, {1, 0, 1, 1}}, {OpCode::ImpliesBA, {1, 1, 0, 1}},
    {OpCode::InhibitAB, {0, 1, 0, 0}}, {OpCode::InhibitBA, {0, 0, 1, 0}},
    {OpCode::NotA, {0, 0, 1, 1}},      {OpCode::NotB, {0, 1, 0, 1}},
    {OpCode::IdentA, {1, 1, 0, 0}},    {OpCode::IdentB, {1, 0, 1, 0}},
    {OpCode::Zero, {0, 0, 0, 0}},      {OpCode::One, {1, 1, 1, 1}},
};

}  // namespace

TEST_SUITE("boolean_ops") {

TEST_CASE("not and neg_rho") {
  CHECK(not_p(0.0) == 1.0);
  CHECK(not_p(0.3) == 0.7);
  CHECK(not_p(not_p(0.42)) == doctest::Approx(0.42).epsilon(1e-15));
  CHECK(neg_rho({-0.2, 0.4}) == RhoInterval{-0.4, 0.2});
  CHECK(neg_rho({0.0, 0.0}) == RhoInterval{0.0, 0.0});
  CHECK(neg_rho(neg_rho({-0.7, 0.1})) == RhoInterval{-0.7, 0.1});
}

TEST_CASE("or_p") {
  CHECK(or_p(0.5, 0.5, 0.0) == 0.75);
  CHECK(or_p(0.3, 0.2, 1.0) == doctest::Approx(0.3).epsilon(1e-15));
  for (double a : {0.0, 0.21, 0.9})
    for (double rho : {-1.0, 0.0, 0.5})
      CHECK(or_p(a, 0.0, rho) == doctest::Approx(a).epsilon(1e-15));
  // equivalent to the inclusion-exclusion form
  for (double a : {0.1, 0.45, 0.8})
    for (double b : {0.2, 0.5, 0.95})
      for (double rho : {-0.8, -0.1, 0.3, 1.0})
        CHECK(or_p(a, b, rho) ==
              doctest::Approx(a + b - c_and(a, b, rho)).epsilon(1e-14));
}

TEST_CASE("xor_p") {
  CHECK(xor_p(0.5, 0.5, 1.0) == 0.0);
  CHECK(xor_p(0.5, 0.5, 0.0) == 0.5);
  CHECK(xor_p(0.3, 0.2, 0.0) == doctest::Approx(0.38).epsilon(1e-14));
}

TEST_CASE("apply_op examples") {
  CHECK(apply_op(OpCode::Nand, 0.3, 0.2, 0.0) == doctest::Approx(0.94).epsilon(1e-14));
  CHECK(apply_op(OpCode::ImpliesAB, 0.3, 0.2, 0.0) == doctest::Approx(0.76).epsilon(1e-14));
  CHECK(apply_op(OpCode::Nor, 0.3, 0.2, 0.0) == doctest::Approx(0.56).epsilon(1e-14));
}

TEST_CASE("classical truth tables at degenerate inputs") {
  const double points[4][2] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};
  for (const TruthRow& row : kTruth)
    for (int i = 0; i < 4; ++i)
      for (double rho : {-1.0, -0.3, 0.0, 0.6, 1.0})
        CHECK(apply_op(row.op, points[i][0], points[i][1], rho) == row.bits[i]);
}

TEST_CASE("De Morgan closure") {
  // one complement round-trip: exact up to a single ulp
  for (double a : {0.0, 0.2, 0.55, 1.0})
    for (double b : {0.1, 0.5, 0.77})
      for (double rho : {-1.0, -0.25, 0.0, 0.7, 1.0}) {
        CHECK(apply_op(OpCode::Nor, a, b, rho) ==
              doctest::Approx(1.0 - apply_op(OpCode::Or, a, b, rho)).epsilon(1e-15));
        CHECK(apply_op(OpCode::Nand, a, b, rho) ==
              doctest::Approx(1.0 - apply_op(OpCode::And, a, b, rho)).epsilon(1e-15));
      }
}

TEST_CASE("joint_bernoulli examples") {
  const JointTable t = joint_bernoulli(0.5, 0.5, 0.3);
  CHECK(t.p11 == doctest::Approx(0.325).epsilon(1e-14));
  CHECK(t.p10 == doctest::Approx(0.175).epsilon(1e-14));
  CHECK(t.p01 == doctest::Approx(0.175).epsilon(1e-14));
  CHECK(t.p00 == doctest::Approx(0.325).epsilon(1e-14));

  const JointTable c = joint_bernoulli(0.5, 0.5, 1.0);
  CHECK(c.p11 == 0.5);
  CHECK(c.p10 == 0.0);
  CHECK(c.p01 == 0.0);
  CHECK(c.p00 == 0.5);

  for (double a : {0.2, 0.6})
    for (double b : {0.15, 0.8}) {
      const JointTable ind = joint_bernoulli(a, b, 0.0);
      CHECK(ind.p11 == doctest::Approx(a * b).epsilon(1e-15));
      CHECK(ind.p10 == doctest::Approx(a * (1 - b)).epsilon(1e-15));
      CHECK(ind.p01 == doctest::Approx((1 - a) * b).epsilon(1e-15));
      CHECK(ind.p00 == doctest::Approx((1 - a) * (1 - b)).epsilon(1e-15));
    }
}

TEST_CASE("joint table marginalises exactly, clamped regimes included") {
  for (int ia = 0; ia <= 20; ++ia)
    for (int ib = 0; ib <= 20; ++ib)
      for (int ir = -10; ir <= 10; ++ir) {
        const double a = ia / 20.0, b = ib / 20.0, rho = ir / 10.0;
        const JointTable t = joint_bernoulli(a, b, rho);
        CHECK(t.p11 + t.p10 == doctest::Approx(a).epsilon(1e-12));
        CHECK(t.p11 + t.p01 == doctest::Approx(b).epsilon(1e-12));
        CHECK(t.p11 + t.p10 + t.p01 + t.p00 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t.p11 >= -1e-12);
        CHECK(t.p10 >= -1e-12);
        CHECK(t.p01 >= -1e-12);
        CHECK(t.p00 >= -1e-12);
      }
}

TEST_CASE("op shapes predict the monotonicity sign in rho") {
  for (OpCode op : kAllOps) {
    const OpShape s = op_shape(op);
    if (s.base != OpShape::Base::AndForm) continue;
    // sign of d(apply_op)/d(rho): +1 for an AND-like composition of the
    // original rho with no output complement, flipped per complement_out
    const int expect = (s.complement_out ? -1 : 1) * rho_sign(s);
    for (double a : {0.25, 0.5, 0.7})
      for (double b : {0.3, 0.6}) {
        const double d = apply_op(op, a, b, 0.2) - apply_op(op, a, b, -0.2);
        CHECK(expect * d >= -1e-12);
      }
  }
}

TEST_CASE("or_p non-increasing in rho; c_and non-decreasing") {
  for (double a : {0.1, 0.4, 0.75})
    for (double b : {0.2, 0.5, 0.9})
      for (int ir = -10; ir < 10; ++ir) {
        const double r0 = ir / 10.0, r1 = (ir + 1) / 10.0;
        CHECK(or_p(a, b, r1) - or_p(a, b, r0) <= 1e-12);
        CHECK(c_and(a, b, r1) - c_and(a, b, r0) >= -1e-12);
      }
}

TEST_CASE("sample_pairs determinism and degenerate cases") {
  const BitPairSample s1 = sample_pairs(0.5, 0.5, 0.3, 5000, 7);
  const BitPairSample s2 = sample_pairs(0.5, 0.5, 0.3, 5000, 7);
  CHECK(s1.a == s2.a);
  CHECK(s1.b == s2.b);
  const BitPairSample s3 = sample_pairs(0.5, 0.5, 0.3, 5000, 8);
  CHECK(s1.a != s3.a);

  const BitPairSample serial = sample_pairs_serial(0.5, 0.5, 0.3, 5000, 7);
  CHECK(s1.a == serial.a);
  CHECK(s1.b == serial.b);

  const BitPairSample comono = sample_pairs(0.5, 0.5, 1.0, 20000, 3);
  CHECK(comono.a == comono.b);

  const BitPairSample clamped = sample_pairs(0.3, 0.2, -1.0, 20000, 4);
  for (std::size_t i = 0; i < clamped.a.size(); ++i)
    CHECK(!(clamped.a[i] && clamped.b[i]));

  CHECK_THROWS_AS(sample_pairs(0.5, 0.5, 0.0, 0, 1), std::invalid_argument);
}

TEST_CASE("sample_pairs empirical joint frequency") {
  const std::size_t n = 200000;
  const BitPairSample s = sample_pairs(0.5, 0.5, 0.0, n, 1);
  std::size_t n11 = 0;
  for (std::size_t i = 0; i < n; ++i) n11 += s.a[i] & s.b[i];
  const double se = std::sqrt(0.25 * 0.75 / n);
  CHECK(std::fabs(double(n11) / n - 0.25) <= 3 * se);
}

TEST_CASE("sample_pearson") {
  CHECK(sample_pearson(kVecA, kVecB) == doctest::Approx(0.35).epsilon(0.014));
  CHECK(sample_pearson(kVecA, kVecA) == doctest::Approx(1.0).epsilon(1e-12));
  BitVector neg = kVecA;
  for (auto& bit : neg) bit = 1 - bit;
  CHECK(sample_pearson(kVecA, neg) == doctest::Approx(-1.0).epsilon(1e-12));
  const BitVector konst(13, 1);
  CHECK_THROWS_AS(sample_pearson(kVecA, konst), std::domain_error);
  CHECK_THROWS_AS(sample_pearson(kVecA, BitVector{0, 1}), std::invalid_argument);
}

TEST_CASE("op_name round-trip") {
  for (OpCode op : kAllOps) CHECK(op_from_name(op_name(op)) == op);
  CHECK(!op_from_name("nope").has_value());
}

}  // TEST_SUITE
