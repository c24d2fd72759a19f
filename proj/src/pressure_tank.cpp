// SPDX-License-Identifier: Apache-2.0
#include "unclogic/pressure_tank.hpp"

#include <sstream>
#include <stdexcept>

#include "unclogic/fault_tree.hpp"

namespace unclogic::pressure_tank {

std::string scenario_name(Scenario s) {
  return s == Scenario::Interval ? "interval" : "pbox";
}

std::string case_name(Dependence d) {
  switch (d) {
    case Dependence::Independence: return "indep";
    case Dependence::Mixed: return "mixed";
    case Dependence::Unknown: return "unknown";
  }
  return "?";
}

std::string fixture_name(Scenario s, Dependence d) {
  return "pressure_tank_" + scenario_name(s) + "_" + case_name(d) + ".ftree";
}

namespace {

std::string case_title(Dependence d) {
  switch (d) {
    case Dependence::Independence: return "independence";
    case Dependence::Mixed: return "mixed dependence";
    case Dependence::Unknown: return "unknown dependence";
  }
  return "?";
}

// per-gate rho annotation for the three dependence cases
std::string gate_rho(Dependence d, const char* gate) {
  if (d == Dependence::Independence) return "rho 0";
  if (d == Dependence::Unknown) return "rho -1 1 copula frechet";
  const std::string g = gate;
  if (g == "E1") return "rho 0";
  if (g == "E2") return "rho -1 1";
  if (g == "E3") return "rho 0.15";
  if (g == "E4") return "rho -0.2 0.2";
  if (g == "E5") return "rho 1";
  throw std::logic_error("gate_rho: unknown gate");
}

}  // namespace

std::string fixture_text(Scenario s, Dependence d) {
  std::ostringstream out;
  out << "# Pressure tank system, " << scenario_name(s) << " scenario, "
      << case_title(d) << "\n";
  out << "event T  interval 4.5e-6 5.5e-6\n";
  if (s == Scenario::Interval) {
    out << "event K2 interval 2.5e-5 3.5e-5\n";
  } else {
    out << "event K2 cbox 3 100000\n";
  }
  out << "event S  interval 0.5e-4 1.5e-4\n";
  if (s == Scenario::Interval) {
    out << "event K1 interval 2.5e-5 3.5e-5\n";
    out << "event R  interval 0.5e-4 1.5e-4\n";
  } else {
    out << "event K1 cbox 3 100000\n";
    out << "event R  cbox 1 10000\n";
  }
  out << "event S1 interval 2.5e-5 3.5e-5\n";
  out << "gate E5 or  K1 R  " << gate_rho(d, "E5") << "\n";
  out << "gate E4 or  S1 E5 " << gate_rho(d, "E4") << "\n";
  out << "gate E3 and S  E4 " << gate_rho(d, "E3") << "\n";
  out << "gate E2 or  K2 E3 " << gate_rho(d, "E2") << "\n";
  out << "gate E1 or  T  E2 " << gate_rho(d, "E1") << "\n";
  out << "top E1\n";
  return out.str();
}

namespace {

FaultTree parse_fixture(Scenario s, Dependence d) {
  ParseResult res = parse_tree(fixture_text(s, d));
  if (!res.ok()) throw std::logic_error("pressure tank fixture failed to parse");
  return *std::move(res.tree);
}

}  // namespace

std::string table5_csv() {
  std::string out = "case,lo,hi\n";
  for (Dependence d : kCases) {
    const UnitInterval e1 = evaluate_interval(parse_fixture(Scenario::Interval, d));
    out += case_title(d) + "," + fmt_double(e1.lo) + "," + fmt_double(e1.hi) + "\n";
  }
  return out;
}

std::string table6_csv(int n_steps, double query) {
  std::string out = "case,lo,hi\n";
  for (Dependence d : kCases) {
    const PBox e1 = evaluate_pbox(parse_fixture(Scenario::Pbox, d), n_steps);
    const UnitInterval b = cdf_bounds_at(e1, query);
    out += case_title(d) + "," + fmt_double(b.lo) + "," + fmt_double(b.hi) + "\n";
  }
  return out;
}

}  // namespace unclogic::pressure_tank
