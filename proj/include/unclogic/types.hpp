// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <stdexcept>
#include <string>

namespace unclogic {

/// Shortest round-trip decimal form of a double.
inline std::string fmt_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

inline bool is_unit_prob(double p) { return p >= 0.0 && p <= 1.0; }
inline bool is_rho(double r) { return r >= -1.0 && r <= 1.0; }

/// Closed sub-interval of [0,1]; carries an event probability or a bound pair.
struct UnitInterval {
  double lo = 0.0;
  double hi = 0.0;

  static UnitInterval make(double lo, double hi) {
    if (!is_unit_prob(lo) || !is_unit_prob(hi) || lo > hi)
      throw std::invalid_argument("UnitInterval: need 0 <= lo <= hi <= 1, got [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return {lo, hi};
  }
  static UnitInterval point(double p) { return make(p, p); }

  bool contains(double p) const { return lo <= p && p <= hi; }
  bool contains(const UnitInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  double width() const { return hi - lo; }

  friend bool operator==(const UnitInterval&, const UnitInterval&) = default;
};

/// Closed sub-interval of [-1,1]: partial knowledge of a Pearson correlation.
struct RhoInterval {
  double lo = 0.0;
  double hi = 0.0;

  static RhoInterval make(double lo, double hi) {
    if (!is_rho(lo) || !is_rho(hi) || lo > hi)
      throw std::invalid_argument("RhoInterval: need -1 <= lo <= hi <= 1, got [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return {lo, hi};
  }
  static RhoInterval point(double r) { return make(r, r); }
  static RhoInterval full() { return {-1.0, 1.0}; }

  bool contains(double r) const { return lo <= r && r <= hi; }
  bool contains(const RhoInterval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const RhoInterval&, const RhoInterval&) = default;
};

/// 1 - [lo, hi], endpoints swap.
inline UnitInterval complement(UnitInterval u) { return {1.0 - u.hi, 1.0 - u.lo}; }

}  // namespace unclogic
