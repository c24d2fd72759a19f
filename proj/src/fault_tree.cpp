// SPDX-License-Identifier: Apache-2.0
#include "unclogic/fault_tree.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "unclogic/interval_ops.hpp"

namespace unclogic {

const EventSpec* FaultTree::find_event(std::string_view name) const {
  for (const auto& e : events)
    if (e.name == name) return &e;
  return nullptr;
}

const GateSpec* FaultTree::find_gate(std::string_view name) const {
  for (const auto& g : gates)
    if (g.name == name) return &g;
  return nullptr;
}

std::string_view diag_code_name(DiagCode code) {
  switch (code) {
    case DiagCode::Syntax: return "syntax";
    case DiagCode::UnknownReference: return "unknown-reference";
    case DiagCode::DuplicateName: return "duplicate-name";
    case DiagCode::ChildReused: return "child-reused";
    case DiagCode::Cycle: return "cycle";
    case DiagCode::MissingTop: return "missing-top";
    case DiagCode::RhoRange: return "rho-range";
    case DiagCode::ProbRange: return "prob-range";
    case DiagCode::CboxInvalid: return "cbox-invalid";
    case DiagCode::Unreachable: return "unreachable";
  }
  return "?";
}

std::string Diagnostic::format() const {
  std::ostringstream out;
  out << line << ":" << column << ": " << diag_code_name(code) << ": " << message;
  if (!token.empty()) out << " [" << token << "]";
  return out.str();
}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    parse_lines();
    check_semantics();
    ParseResult res;
    res.diagnostics = std::move(diags_);
    if (res.diagnostics.empty()) res.tree = std::move(tree_);
    return res;
  }

 private:
  struct Ref {
    std::string name;
    int line, column;
  };

  void diag(DiagCode code, int line, int col, std::string token, std::string msg) {
    diags_.push_back({code, line, col, std::move(token), std::move(msg)});
  }

  bool parse_number(const Token& tok, int line, double& out) {
    errno = 0;
    char* end = nullptr;
    out = std::strtod(tok.text.c_str(), &end);
    if (end != tok.text.c_str() + tok.text.size() || errno == ERANGE) {
      diag(DiagCode::Syntax, line, tok.column, tok.text, "expected a number");
      return false;
    }
    return true;
  }

  bool parse_count(const Token& tok, int line, long& out) {
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), out);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
      diag(DiagCode::Syntax, line, tok.column, tok.text, "expected an integer");
      return false;
    }
    return true;
  }

  bool declare(const Token& name, int line) {
    if (names_.count(name.text)) {
      diag(DiagCode::DuplicateName, line, name.column, name.text,
           "name already declared");
      return false;
    }
    names_.insert(name.text);
    return true;
  }

  void parse_lines() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      const std::string_view line =
          text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                         : nl - pos);
      pos = (nl == std::string_view::npos) ? text_.size() + 1 : nl + 1;
      ++line_no;
      const std::vector<Token> toks = tokenize(line);
      if (toks.empty()) continue;
      const std::string& kw = toks[0].text;
      if (kw == "event")
        parse_event(toks, line_no);
      else if (kw == "gate")
        parse_gate(toks, line_no);
      else if (kw == "top")
        parse_top(toks, line_no);
      else
        diag(DiagCode::Syntax, line_no, toks[0].column, kw,
             "expected 'event', 'gate' or 'top'");
    }
  }

  void parse_event(const std::vector<Token>& toks, int line) {
    if (toks.size() < 3) {
      diag(DiagCode::Syntax, line, toks[0].column, toks[0].text,
           "event needs a name and a probability form");
      return;
    }
    EventSpec ev;
    ev.name = toks[1].text;
    const std::string& form = toks[2].text;
    if (form == "point") {
      if (toks.size() != 4) {
        diag(DiagCode::Syntax, line, toks[2].column, form, "point needs one value");
        return;
      }
      double p;
      if (!parse_number(toks[3], line, p)) return;
      if (!is_unit_prob(p)) {
        diag(DiagCode::ProbRange, line, toks[3].column, toks[3].text,
             "probability outside [0,1]");
        return;
      }
      ev.kind = EventSpec::Kind::Point;
      ev.prob = {p, p};
    } else if (form == "interval") {
      if (toks.size() != 5) {
        diag(DiagCode::Syntax, line, toks[2].column, form, "interval needs two values");
        return;
      }
      double lo, hi;
      if (!parse_number(toks[3], line, lo) || !parse_number(toks[4], line, hi)) return;
      if (!is_unit_prob(lo) || !is_unit_prob(hi) || lo > hi) {
        diag(DiagCode::ProbRange, line, toks[3].column,
             toks[3].text + " " + toks[4].text,
             "need 0 <= lo <= hi <= 1");
        return;
      }
      ev.kind = EventSpec::Kind::Interval;
      ev.prob = {lo, hi};
    } else if (form == "cbox") {
      if (toks.size() != 5) {
        diag(DiagCode::Syntax, line, toks[2].column, form, "cbox needs k and n");
        return;
      }
      long k, n;
      if (!parse_count(toks[3], line, k) || !parse_count(toks[4], line, n)) return;
      if (k < 0 || n < 1 || k > n) {
        diag(DiagCode::CboxInvalid, line, toks[3].column,
             toks[3].text + " " + toks[4].text, "need 0 <= k <= n, n >= 1");
        return;
      }
      ev.kind = EventSpec::Kind::Cbox;
      ev.k = k;
      ev.n = n;
    } else {
      diag(DiagCode::Syntax, line, toks[2].column, form,
           "expected 'point', 'interval' or 'cbox'");
      return;
    }
    if (!declare(toks[1], line)) return;
    tree_.events.push_back(std::move(ev));
  }

  void parse_gate(const std::vector<Token>& toks, int line) {
    if (toks.size() < 7) {
      diag(DiagCode::Syntax, line, toks[0].column, toks[0].text,
           "gate needs: name, and|or, two children, rho <r>");
      return;
    }
    GateSpec g;
    g.name = toks[1].text;
    if (toks[2].text == "and")
      g.op = GateOp::And;
    else if (toks[2].text == "or")
      g.op = GateOp::Or;
    else {
      diag(DiagCode::Syntax, line, toks[2].column, toks[2].text,
           "expected 'and' or 'or'");
      return;
    }
    g.left = toks[3].text;
    g.right = toks[4].text;
    if (toks[5].text != "rho") {
      diag(DiagCode::Syntax, line, toks[5].column, toks[5].text, "expected 'rho'");
      return;
    }
    double r_lo;
    if (!parse_number(toks[6], line, r_lo)) return;
    double r_hi = r_lo;
    std::size_t next = 7;
    if (next < toks.size() && toks[next].text != "copula") {
      if (!parse_number(toks[next], line, r_hi)) return;
      ++next;
    }
    if (!is_rho(r_lo) || !is_rho(r_hi) || r_lo > r_hi) {
      diag(DiagCode::RhoRange, line, toks[6].column, toks[6].text,
           "correlation outside [-1,1] or lo > hi");
      return;
    }
    g.rho = {r_lo, r_hi};
    if (next < toks.size()) {
      if (toks[next].text != "copula") {
        diag(DiagCode::Syntax, line, toks[next].column, toks[next].text,
             "expected 'copula'");
        return;
      }
      if (next + 1 >= toks.size()) {
        diag(DiagCode::Syntax, line, toks[next].column, toks[next].text,
             "copula needs a kind");
        return;
      }
      const Token& kind = toks[next + 1];
      next += 2;
      if (kind.text == "pi") {
        g.upper = CopulaSpec::pi();
      } else if (kind.text == "w") {
        g.upper = CopulaSpec::w();
      } else if (kind.text == "m") {
        g.upper = CopulaSpec::m();
      } else if (kind.text == "frechet") {
        g.upper = CopulaSpec::frechet_unknown();
      } else if (kind.text == "gaussian") {
        if (next >= toks.size()) {
          diag(DiagCode::Syntax, line, kind.column, kind.text,
               "gaussian needs a parameter");
          return;
        }
        double r;
        if (!parse_number(toks[next], line, r)) return;
        if (!is_rho(r)) {
          diag(DiagCode::RhoRange, line, toks[next].column, toks[next].text,
               "gaussian parameter outside [-1,1]");
          return;
        }
        g.upper = CopulaSpec::gaussian(r);
        ++next;
      } else {
        diag(DiagCode::Syntax, line, kind.column, kind.text,
             "expected pi, w, m, gaussian <r> or frechet");
        return;
      }
    }
    if (next != toks.size()) {
      diag(DiagCode::Syntax, line, toks[next].column, toks[next].text,
           "unexpected trailing tokens");
      return;
    }
    if (!declare(toks[1], line)) return;
    refs_.push_back({g.left, line, toks[3].column});
    refs_.push_back({g.right, line, toks[4].column});
    tree_.gates.push_back(std::move(g));
  }

  void parse_top(const std::vector<Token>& toks, int line) {
    if (toks.size() != 2) {
      diag(DiagCode::Syntax, line, toks[0].column, toks[0].text,
           "top needs exactly one name");
      return;
    }
    if (!tree_.top.empty()) {
      diag(DiagCode::Syntax, line, toks[1].column, toks[1].text,
           "top already declared");
      return;
    }
    tree_.top = toks[1].text;
    top_tok_ = {toks[1].text, line, toks[1].column};
  }

  void check_semantics() {
    // references must resolve, and no node may be referenced twice
    std::unordered_map<std::string, int> ref_count;
    for (const Ref& r : refs_) {
      if (!names_.count(r.name)) {
        diag(DiagCode::UnknownReference, r.line, r.column, r.name,
             "reference to an undeclared node");
        continue;
      }
      if (++ref_count[r.name] == 2)
        diag(DiagCode::ChildReused, r.line, r.column, r.name,
             "node referenced as a child more than once");
    }
    if (tree_.top.empty()) {
      diag(DiagCode::MissingTop, 0, 0, "", "no top statement");
      return;
    }
    if (!names_.count(tree_.top)) {
      diag(DiagCode::UnknownReference, top_tok_.line, top_tok_.column,
           tree_.top, "top names an undeclared node");
      return;
    }

    // cycle detection over the gate reference graph
    std::unordered_map<std::string, const GateSpec*> gate_of;
    for (const auto& g : tree_.gates) gate_of[g.name] = &g;
    std::unordered_map<std::string, int> colour;  // 0 new, 1 on stack, 2 done
    std::function<void(const std::string&)> visit = [&](const std::string& n) {
      const auto it = gate_of.find(n);
      colour[n] = 1;
      if (it != gate_of.end()) {
        for (const std::string* child : {&it->second->left, &it->second->right}) {
          const int c = colour.count(*child) ? colour[*child] : 0;
          if (c == 1)
            diag(DiagCode::Cycle, 0, 0, *child,
                 "gate references form a cycle through '" + *child + "'");
          else if (c == 0 && names_.count(*child))
            visit(*child);
        }
      }
      colour[n] = 2;
    };
    for (const auto& g : tree_.gates)
      if (!colour.count(g.name)) visit(g.name);

    // reachability from top
    std::unordered_set<std::string> reachable;
    std::function<void(const std::string&)> reach = [&](const std::string& n) {
      if (!reachable.insert(n).second) return;
      const auto it = gate_of.find(n);
      if (it != gate_of.end()) {
        if (names_.count(it->second->left)) reach(it->second->left);
        if (names_.count(it->second->right)) reach(it->second->right);
      }
    };
    reach(tree_.top);
    for (const auto& e : tree_.events)
      if (!reachable.count(e.name))
        diag(DiagCode::Unreachable, 0, 0, e.name,
             "node not reachable from the top event");
    for (const auto& g : tree_.gates)
      if (!reachable.count(g.name))
        diag(DiagCode::Unreachable, 0, 0, g.name,
             "node not reachable from the top event");
  }

  std::string_view text_;
  FaultTree tree_;
  std::vector<Diagnostic> diags_;
  std::unordered_set<std::string> names_;
  std::vector<Ref> refs_;
  Ref top_tok_{};
};

}  // namespace

ParseResult parse_tree(std::string_view text) { return Parser(text).run(); }

std::string serialize_tree(const FaultTree& tree) {
  std::ostringstream out;
  for (const auto& e : tree.events) {
    out << "event " << e.name << " ";
    switch (e.kind) {
      case EventSpec::Kind::Point:
        out << "point " << fmt_double(e.prob.lo);
        break;
      case EventSpec::Kind::Interval:
        out << "interval " << fmt_double(e.prob.lo) << " " << fmt_double(e.prob.hi);
        break;
      case EventSpec::Kind::Cbox:
        out << "cbox " << e.k << " " << e.n;
        break;
    }
    out << "\n";
  }
  for (const auto& g : tree.gates) {
    out << "gate " << g.name << " " << (g.op == GateOp::And ? "and" : "or") << " "
        << g.left << " " << g.right << " rho " << fmt_double(g.rho.lo);
    if (g.rho.hi != g.rho.lo) out << " " << fmt_double(g.rho.hi);
    switch (g.upper.tag) {
      case CopulaSpec::Tag::Pi: break;  // the default; keep lines short
      case CopulaSpec::Tag::W: out << " copula w"; break;
      case CopulaSpec::Tag::M: out << " copula m"; break;
      case CopulaSpec::Tag::Gaussian:
        out << " copula gaussian " << fmt_double(g.upper.r);
        break;
      case CopulaSpec::Tag::FrechetUnknown: out << " copula frechet"; break;
    }
    out << "\n";
  }
  out << "top " << tree.top << "\n";
  return out.str();
}

namespace {

template <typename EventFn, typename GateFn>
auto fold_tree(const FaultTree& tree, const std::string& node, EventFn&& on_event,
               GateFn&& on_gate) -> decltype(on_event(std::declval<EventSpec>())) {
  if (const GateSpec* g = tree.find_gate(node)) {
    auto l = fold_tree(tree, g->left, on_event, on_gate);
    auto r = fold_tree(tree, g->right, on_event, on_gate);
    return on_gate(*g, std::move(l), std::move(r));
  }
  const EventSpec* e = tree.find_event(node);
  if (!e) throw EvalError("evaluate: undeclared node '" + node + "'");
  return on_event(*e);
}

std::string kind_string(const EventSpec& e) {
  switch (e.kind) {
    case EventSpec::Kind::Point: return "event point";
    case EventSpec::Kind::Interval: return "event interval";
    case EventSpec::Kind::Cbox: return "event cbox";
  }
  return "event";
}

}  // namespace

UnitInterval evaluate_interval(const FaultTree& tree) {
  return fold_tree(
      tree, tree.top,
      [](const EventSpec& e) -> UnitInterval {
        if (e.kind == EventSpec::Kind::Cbox)
          throw EvalError("interval mode cannot evaluate c-box event '" + e.name + "'");
        return e.prob;
      },
      [](const GateSpec& g, UnitInterval l, UnitInterval r) {
        return apply_op_i(g.op == GateOp::And ? OpCode::And : OpCode::Or, l, r, g.rho);
      });
}

PBox evaluate_pbox(const FaultTree& tree, int n_steps) {
  return fold_tree(
      tree, tree.top,
      [&](const EventSpec& e) -> PBox {
        switch (e.kind) {
          case EventSpec::Kind::Point: return pbox_point(e.prob.lo, n_steps);
          case EventSpec::Kind::Interval: return pbox_interval(e.prob, n_steps);
          case EventSpec::Kind::Cbox: return cbox_kn(e.k, e.n, n_steps);
        }
        throw EvalError("evaluate_pbox: bad event kind");
      },
      [](const GateSpec& g, const PBox& l, const PBox& r) {
        return apply_op_pbox(g.op == GateOp::And ? OpCode::And : OpCode::Or, l, r,
                             g.rho, g.upper);
      });
}

std::vector<ExplainRow> explain_interval(const FaultTree& tree) {
  std::vector<ExplainRow> rows;
  fold_tree(
      tree, tree.top,
      [&](const EventSpec& e) -> UnitInterval {
        if (e.kind == EventSpec::Kind::Cbox)
          throw EvalError("interval mode cannot evaluate c-box event '" + e.name + "'");
        rows.push_back({e.name, kind_string(e), e.prob, {}, false});
        return e.prob;
      },
      [&](const GateSpec& g, UnitInterval l, UnitInterval r) {
        const UnitInterval v =
            apply_op_i(g.op == GateOp::And ? OpCode::And : OpCode::Or, l, r, g.rho);
        rows.push_back({g.name, g.op == GateOp::And ? "gate and" : "gate or", v, {}, false});
        return v;
      });
  return rows;
}

std::vector<ExplainRow> explain_pbox(const FaultTree& tree, int n_steps) {
  std::vector<ExplainRow> rows;
  auto summarize = [](const PBox& x) {
    const int mid = x.steps() / 2;
    return UnitInterval{x.q_lo()[mid], x.q_hi()[mid]};
  };
  fold_tree(
      tree, tree.top,
      [&](const EventSpec& e) -> PBox {
        PBox p = [&] {
          switch (e.kind) {
            case EventSpec::Kind::Point: return pbox_point(e.prob.lo, n_steps);
            case EventSpec::Kind::Interval: return pbox_interval(e.prob, n_steps);
            default: return cbox_kn(e.k, e.n, n_steps);
          }
        }();
        rows.push_back({e.name, kind_string(e), p.support(), summarize(p), true});
        return p;
      },
      [&](const GateSpec& g, const PBox& l, const PBox& r) {
        PBox v = apply_op_pbox(g.op == GateOp::And ? OpCode::And : OpCode::Or, l, r,
                               g.rho, g.upper);
        rows.push_back({g.name, g.op == GateOp::And ? "gate and" : "gate or",
                        v.support(), summarize(v), true});
        return v;
      });
  return rows;
}

std::string explain_to_text(const std::vector<ExplainRow>& rows) {
  std::size_t name_w = 4, kind_w = 4;
  for (const auto& r : rows) {
    name_w = std::max(name_w, r.name.size());
    kind_w = std::max(kind_w, r.kind.size());
  }
  std::ostringstream out;
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-*s  %-*s  [%.4g, %.4g]",
                  static_cast<int>(name_w), r.name.c_str(),
                  static_cast<int>(kind_w), r.kind.c_str(), r.value.lo, r.value.hi);
    out << buf;
    if (r.has_median) {
      std::snprintf(buf, sizeof buf, "  median [%.4g, %.4g]", r.median.lo, r.median.hi);
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

std::string explain_to_csv(const std::vector<ExplainRow>& rows) {
  std::ostringstream out;
  const bool medians = !rows.empty() && rows.front().has_median;
  out << (medians ? "name,kind,lo,hi,median_lo,median_hi\n" : "name,kind,lo,hi\n");
  for (const auto& r : rows) {
    out << r.name << "," << r.kind << "," << fmt_double(r.value.lo) << ","
        << fmt_double(r.value.hi);
    if (medians) out << "," << fmt_double(r.median.lo) << "," << fmt_double(r.median.hi);
    out << "\n";
  }
  return out.str();
}

}  // namespace unclogic
