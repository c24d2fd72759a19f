// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unclogic/pbox.hpp"
#include "unclogic/types.hpp"

namespace unclogic {

struct EventSpec {
  enum class Kind { Point, Interval, Cbox };
  std::string name;
  Kind kind = Kind::Point;
  UnitInterval prob;  // Point: lo == hi; unused for Cbox
  long k = 0, n = 0;  // Cbox parameters

  friend bool operator==(const EventSpec&, const EventSpec&) = default;
};

enum class GateOp { And, Or };

struct GateSpec {
  std::string name;
  GateOp op = GateOp::And;
  std::string left, right;
  RhoInterval rho;
  CopulaSpec upper = CopulaSpec::pi();

  friend bool operator==(const GateSpec&, const GateSpec&) = default;
};

/// Rooted tree of binary gates over basic events. Each node is referenced at
/// most once: the pairwise-correlation formalism has no semantics for gates
/// sharing a descendant.
struct FaultTree {
  std::vector<EventSpec> events;
  std::vector<GateSpec> gates;
  std::string top;

  const EventSpec* find_event(std::string_view name) const;
  const GateSpec* find_gate(std::string_view name) const;

  friend bool operator==(const FaultTree&, const FaultTree&) = default;
};

enum class DiagCode {
  Syntax,
  UnknownReference,
  DuplicateName,
  ChildReused,
  Cycle,
  MissingTop,
  RhoRange,
  ProbRange,
  CboxInvalid,
  Unreachable,
};

std::string_view diag_code_name(DiagCode code);

struct Diagnostic {
  DiagCode code;
  int line = 0;    // 1-based; 0 when the problem is file-wide
  int column = 0;  // 1-based
  std::string token;
  std::string message;

  std::string format() const;  // "line:col: code: message [token]"
};

struct ParseResult {
  std::optional<FaultTree> tree;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return tree.has_value(); }
};

/// Line-oriented grammar, '#' comments:
///   event <name> point <p>
///   event <name> interval <lo> <hi>
///   event <name> cbox <k> <n>
///   gate  <name> (and|or) <child> <child> rho <r> [<r_hi>]
///         [copula (pi|w|m|gaussian <r>|frechet)]
///   top   <name>
ParseResult parse_tree(std::string_view text);

std::string serialize_tree(const FaultTree& tree);

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bottom-up interval fold. Throws EvalError if a c-box event is present.
UnitInterval evaluate_interval(const FaultTree& tree);

/// Bottom-up p-box fold at n_steps levels; gates honour their upper-level
/// copula annotation (`copula frechet` routes through conv_and_frechet).
PBox evaluate_pbox(const FaultTree& tree, int n_steps);

struct ExplainRow {
  std::string name;
  std::string kind;
  UnitInterval value;            // interval result, or p-box support
  UnitInterval median{0.0, 0.0};  // p-box mode: bounds at the median level
  bool has_median = false;
};

/// Per-node intermediate results, children before parents.
std::vector<ExplainRow> explain_interval(const FaultTree& tree);
std::vector<ExplainRow> explain_pbox(const FaultTree& tree, int n_steps);

std::string explain_to_text(const std::vector<ExplainRow>& rows);
std::string explain_to_csv(const std::vector<ExplainRow>& rows);

}  // namespace unclogic
