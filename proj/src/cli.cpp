// SPDX-License-Identifier: Apache-2.0
#include "unclogic/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "unclogic/fault_tree.hpp"
#include "unclogic/interval_ops.hpp"
#include "unclogic/kernel.hpp"
#include "unclogic/pressure_tank.hpp"

namespace unclogic {

namespace {

using nlohmann::json;

std::string fmt_interval(UnitInterval v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%.4g, %.4g]", v.lo, v.hi);
  return buf;
}

struct RunConfig {
  std::string mode = "interval";
  int n_steps = 200;
  std::string output = "text";
  double query = -1.0;
  bool has_query = false;
  bool explain = false;
  long long seed = 0;  // reserved for sampling-based subcommands
  std::string out_csv, out_svg;
};

int write_file(const std::filesystem::path& path, const std::string& content,
               std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) {
    err << "error: cannot write " << path.string() << "\n";
    return 1;
  }
  return 0;
}

int cmd_eval(const std::string& path, const RunConfig& cfg, std::ostream& out,
             std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot read " << path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  const ParseResult parsed = parse_tree(buf.str());
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) err << path << ":" << d.format() << "\n";
    return 2;
  }
  const FaultTree& tree = *parsed.tree;

  try {
    if (cfg.mode == "interval") {
      const UnitInterval v = evaluate_interval(tree);
      if (cfg.explain) {
        const auto rows = explain_interval(tree);
        out << (cfg.output == "csv" ? explain_to_csv(rows) : explain_to_text(rows));
        return 0;
      }
      if (cfg.output == "text")
        out << fmt_interval(v) << "\n";
      else if (cfg.output == "csv")
        out << "lo,hi\n" << fmt_double(v.lo) << "," << fmt_double(v.hi) << "\n";
      else
        out << json{{"mode", "interval"}, {"lo", v.lo}, {"hi", v.hi}}.dump() << "\n";
      return 0;
    }

    // pbox mode
    const PBox v = evaluate_pbox(tree, cfg.n_steps);
    if (!cfg.out_csv.empty()) {
      if (int rc = write_file(cfg.out_csv, pbox_to_csv(v), err)) return rc;
      if (cfg.output == "text") out << "wrote " << cfg.out_csv << "\n";
    }
    if (!cfg.out_svg.empty()) {
      if (int rc = write_file(cfg.out_svg, pbox_to_svg(v), err)) return rc;
      if (cfg.output == "text") out << "wrote " << cfg.out_svg << "\n";
    }
    if (cfg.explain) {
      const auto rows = explain_pbox(tree, cfg.n_steps);
      out << (cfg.output == "csv" ? explain_to_csv(rows) : explain_to_text(rows));
      return 0;
    }
    if (cfg.has_query) {
      const UnitInterval b = cdf_bounds_at(v, cfg.query);
      if (cfg.output == "text")
        out << fmt_interval(b) << "\n";
      else if (cfg.output == "csv")
        out << "query,lo,hi\n"
            << fmt_double(cfg.query) << "," << fmt_double(b.lo) << ","
            << fmt_double(b.hi) << "\n";
      else
        out << json{{"mode", "pbox"},
                    {"n_steps", v.steps()},
                    {"query", cfg.query},
                    {"lo", b.lo},
                    {"hi", b.hi}}
                   .dump()
            << "\n";
      return 0;
    }
    if (cfg.output == "text") {
      const int mid = v.steps() / 2;
      out << "support " << fmt_interval(v.support()) << "\n";
      out << "median  " << fmt_interval({v.q_lo()[mid], v.q_hi()[mid]}) << "\n";
    } else if (cfg.output == "csv") {
      out << pbox_to_csv(v);
    } else {
      out << json{{"mode", "pbox"},
                  {"n_steps", v.steps()},
                  {"q_lo", v.q_lo()},
                  {"q_hi", v.q_hi()}}
                 .dump()
          << "\n";
    }
    return 0;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_gate(const std::string& op_name_str, double a_lo, double a_hi, double b_lo,
             double b_hi, const std::vector<double>& rho_args, const RunConfig& cfg,
             std::ostream& out, std::ostream& err) {
  const auto op = op_from_name(op_name_str);
  if (!op) {
    err << "error: unknown operation '" << op_name_str << "'\n";
    return 2;
  }
  UnitInterval a, b;
  RhoInterval rho;
  try {
    a = UnitInterval::make(a_lo, a_hi);
    b = UnitInterval::make(b_lo, b_hi);
    rho = rho_args.size() == 1 ? RhoInterval::point(rho_args[0])
                               : RhoInterval::make(rho_args[0], rho_args[1]);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const UnitInterval v = apply_op_i(*op, a, b, rho);

  if (cfg.output == "json") {
    json j{{"op", op_name_str}, {"lo", v.lo}, {"hi", v.hi}};
    if (*op == OpCode::And) {
      const IntervalJointTable t = joint_i(a, b, rho);
      j["joint"] = {{"p11", {t.p11.lo, t.p11.hi}},
                    {"p10", {t.p10.lo, t.p10.hi}},
                    {"p01", {t.p01.lo, t.p01.hi}},
                    {"p00", {t.p00.lo, t.p00.hi}}};
    }
    out << j.dump() << "\n";
    return 0;
  }
  if (cfg.output == "csv") {
    out << "op,lo,hi\n" << op_name_str << "," << fmt_double(v.lo) << ","
        << fmt_double(v.hi) << "\n";
    if (*op == OpCode::And) {
      const IntervalJointTable t = joint_i(a, b, rho);
      out << "cell,lo,hi\n";
      out << "p11," << fmt_double(t.p11.lo) << "," << fmt_double(t.p11.hi) << "\n";
      out << "p10," << fmt_double(t.p10.lo) << "," << fmt_double(t.p10.hi) << "\n";
      out << "p01," << fmt_double(t.p01.lo) << "," << fmt_double(t.p01.hi) << "\n";
      out << "p00," << fmt_double(t.p00.lo) << "," << fmt_double(t.p00.hi) << "\n";
    }
    return 0;
  }
  out << fmt_interval(v) << "\n";
  if (*op == OpCode::And) {
    const IntervalJointTable t = joint_i(a, b, rho);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-8s%-22s%-22s%s\n", "P(u,v)", "0", "1", "P(u)");
    out << buf;
    std::snprintf(buf, sizeof buf, "%-8s%-22s%-22s%s\n", "0",
                  fmt_interval(t.p00).c_str(), fmt_interval(t.p01).c_str(),
                  fmt_interval(complement(a)).c_str());
    out << buf;
    std::snprintf(buf, sizeof buf, "%-8s%-22s%-22s%s\n", "1",
                  fmt_interval(t.p10).c_str(), fmt_interval(t.p11).c_str(),
                  fmt_interval(a).c_str());
    out << buf;
    std::snprintf(buf, sizeof buf, "%-8s%-22s%-22s\n", "P(v)",
                  fmt_interval(complement(b)).c_str(), fmt_interval(b).c_str());
    out << buf;
  }
  return 0;
}

int cmd_demo(const std::string& name, const std::string& dir, const RunConfig& cfg,
             std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  const fs::path base = dir.empty() ? fs::path(".") : fs::path(dir);
  std::error_code ec;
  fs::create_directories(base, ec);

  if (name == "pressure-tank") {
    using namespace pressure_tank;
    for (Scenario s : kScenarios)
      for (Dependence d : kCases) {
        const fs::path p = base / fixture_name(s, d);
        if (int rc = write_file(p, fixture_text(s, d), err)) return rc;
        out << "wrote " << p.string() << "\n";
      }
    if (int rc = write_file(base / "table5.csv", table5_csv(), err)) return rc;
    out << "wrote " << (base / "table5.csv").string() << "\n";
    if (int rc = write_file(base / "table6.csv", table6_csv(cfg.n_steps, 1e-4), err))
      return rc;
    out << "wrote " << (base / "table6.csv").string() << "\n";
    return 0;
  }

  if (name == "copula-grid") {
    constexpr double kRhos[] = {-1.0, -0.8, -0.4, 0.4, 0.8, 1.0};
    constexpr int kGrid = 51;
    for (double rho : kRhos) {
      std::string csv = "u,v,c\n";
      for (int i = 0; i < kGrid; ++i)
        for (int j = 0; j < kGrid; ++j) {
          const double u = static_cast<double>(i) / (kGrid - 1);
          const double v = static_cast<double>(j) / (kGrid - 1);
          csv += fmt_double(u) + "," + fmt_double(v) + "," +
                 fmt_double(c_and(u, v, rho)) + "\n";
        }
      const fs::path p = base / ("copula_grid_rho_" + fmt_double(rho) + ".csv");
      if (int rc = write_file(p, csv, err)) return rc;
      out << "wrote " << p.string() << "\n";
    }
    return 0;
  }

  err << "error: unknown demo '" << name << "' (try pressure-tank or copula-grid)\n";
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Boolean operations on uncertain events: points, intervals and "
               "probability boxes with interval correlations"};
  app.name("unclogic");
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "interval or pbox")
        ->check(CLI::IsMember({"interval", "pbox"}));
    sub->add_option("--steps", cfg.n_steps, "p-box discretisation levels")
        ->check(CLI::Range(1, 1000000));
    sub->add_option("--output", cfg.output, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for sampling-based queries");
  };

  std::string eval_path;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a fault-tree file");
  eval->add_option("file", eval_path, "fault-tree file")->required();
  add_common(eval);
  CLI::Option* qopt =
      eval->add_option("--query", cfg.query, "bounds on P(top <= t) in pbox mode");
  eval->add_flag("--explain", cfg.explain, "per-node intermediate results");
  eval->add_option("--out-csv", cfg.out_csv, "write the top p-box as CSV");
  eval->add_option("--out-svg", cfg.out_svg, "write the top p-box as SVG");

  std::string gate_op;
  double a_lo, a_hi, b_lo, b_hi;
  std::vector<double> rho_args;
  CLI::App* gate = app.add_subcommand("gate", "evaluate one correlated gate");
  gate->add_option("op", gate_op, "operation (and, or, nand, ...)")->required();
  gate->add_option("a_lo", a_lo)->required();
  gate->add_option("a_hi", a_hi)->required();
  gate->add_option("b_lo", b_lo)->required();
  gate->add_option("b_hi", b_hi)->required();
  gate->add_option("--rho", rho_args, "correlation (one value or lo hi)")
      ->required()
      ->expected(1, 2);
  add_common(gate);

  std::string demo_name, demo_dir;
  CLI::App* demo = app.add_subcommand("demo", "write demo fixtures and tables");
  demo->add_option("name", demo_name, "pressure-tank or copula-grid")->required();
  demo->add_option("--dir", demo_dir, "output directory (default .)");
  add_common(demo);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("unclogic");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  cfg.has_query = qopt->count() > 0;
  if (cfg.mode == "pbox" && cfg.n_steps < 10) {
    err << "error: pbox mode needs --steps >= 10\n";
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_path, cfg, out, err);
    if (gate->parsed())
      return cmd_gate(gate_op, a_lo, a_hi, b_lo, b_hi, rho_args, cfg, out, err);
    if (demo->parsed()) return cmd_demo(demo_name, demo_dir, cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace unclogic
