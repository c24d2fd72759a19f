// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace unclogic::pressure_tank {

/// Pressure-tank system demo: six components (tank T, relays K1/K2/R,
/// pressure switch S, on-switch S1) under five binary gates with top event
/// E1, in two scenarios (interval-valued components, or c-box relays) and
/// three dependence cases.

enum class Scenario { Interval, Pbox };
enum class Dependence { Independence, Mixed, Unknown };

inline constexpr Scenario kScenarios[] = {Scenario::Interval, Scenario::Pbox};
inline constexpr Dependence kCases[] = {Dependence::Independence,
                                        Dependence::Mixed, Dependence::Unknown};

std::string scenario_name(Scenario s);
std::string case_name(Dependence d);

/// e.g. "pressure_tank_interval_indep.ftree"
std::string fixture_name(Scenario s, Dependence d);

/// Fault-tree DSL text for the given scenario and dependence case.
std::string fixture_text(Scenario s, Dependence d);

/// CSV "case,lo,hi": top-event interval for the three interval-scenario cases.
std::string table5_csv();

/// CSV "case,lo,hi": bounds on P(top <= query) for the three p-box cases.
std::string table6_csv(int n_steps, double query);

}  // namespace unclogic::pressure_tank
