// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "unclogic/cli.hpp"
#include "unclogic/pressure_tank.hpp"

using namespace unclogic;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  const fs::path p = fs::temp_directory_path() / "unclogic_cli_test";
  fs::create_directories(p);
  return p;
}

fs::path write_fixture(const std::string& name, const std::string& text) {
  const fs::path p = temp_dir() / name;
  std::ofstream(p) << text;
  return p;
}

// first "[lo, hi]" pair in a string
bool parse_interval(const std::string& s, double& lo, double& hi) {
  const std::size_t b = s.find('[');
  if (b == std::string::npos) return false;
  return std::sscanf(s.c_str() + b, "[%lg, %lg]", &lo, &hi) == 2;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval interval fixture") {
  using namespace pressure_tank;
  const fs::path p = write_fixture("indep.ftree",
                                   fixture_text(Scenario::Interval, Dependence::Independence));
  const CliRun r = cli({"eval", p.string()});
  CHECK(r.code == 0);
  double lo, hi;
  REQUIRE(parse_interval(r.out, lo, hi));
  CHECK(lo == doctest::Approx(2.950e-5).epsilon(0.002));
  CHECK(hi == doctest::Approx(4.053e-5).epsilon(0.002));
}

TEST_CASE("eval broken file exits 2 with a line-numbered diagnostic") {
  const fs::path p = write_fixture("broken.ftree", "event A point 1.5\ntop A\n");
  const CliRun r = cli({"eval", p.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(":1:") != std::string::npos);
  CHECK(r.err.find("prob-range") != std::string::npos);
}

TEST_CASE("eval missing file exits 1") {
  CHECK(cli({"eval", "/nonexistent/x.ftree"}).code == 1);
}

TEST_CASE("eval pbox fixture with query") {
  using namespace pressure_tank;
  const fs::path p = write_fixture("pbox_indep.ftree",
                                   fixture_text(Scenario::Pbox, Dependence::Independence));
  const CliRun r = cli({"eval", p.string(), "--mode", "pbox", "--query", "1e-4"});
  CHECK(r.code == 0);
  double lo, hi;
  REQUIRE(parse_interval(r.out, lo, hi));
  CHECK(std::fabs(lo - 0.969) <= 0.01);
  CHECK(std::fabs(hi - 1.0) <= 0.01);
}

TEST_CASE("eval interval fixture in pbox mode rejected without steps") {
  using namespace pressure_tank;
  const fs::path p = write_fixture("pbox_steps.ftree",
                                   fixture_text(Scenario::Pbox, Dependence::Independence));
  CHECK(cli({"eval", p.string(), "--mode", "pbox", "--steps", "5"}).code == 2);
}

TEST_CASE("eval cbox tree in interval mode is an evaluation error") {
  using namespace pressure_tank;
  const fs::path p = write_fixture("pbox_as_interval.ftree",
                                   fixture_text(Scenario::Pbox, Dependence::Independence));
  const CliRun r = cli({"eval", p.string(), "--mode", "interval"});
  CHECK(r.code == 1);
  CHECK(r.err.find("c-box") != std::string::npos);
}

TEST_CASE("eval --explain and exports") {
  using namespace pressure_tank;
  const fs::path p = write_fixture("explain.ftree",
                                   fixture_text(Scenario::Interval, Dependence::Independence));
  const CliRun r = cli({"eval", p.string(), "--explain"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E5") != std::string::npos);
  CHECK(r.out.find("gate or") != std::string::npos);

  const fs::path csv = temp_dir() / "top.csv";
  const fs::path svg = temp_dir() / "top.svg";
  const CliRun r2 = cli({"eval", p.string(), "--mode", "pbox", "--steps", "50",
                         "--out-csv", csv.string(), "--out-svg", svg.string()});
  CHECK(r2.code == 0);
  CHECK(fs::exists(csv));
  CHECK(fs::exists(svg));
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "level,q_lo,q_hi");
}

TEST_CASE("gate and prints the interval joint table") {
  const CliRun r = cli({"gate", "and", "0.2", "0.3", "0.45", "0.5", "--rho", "-0.2", "0.4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P(u,v)") != std::string::npos);
  CHECK(r.out.find("[0.3042, 0.5196]") != std::string::npos);
  CHECK(r.out.find("[0.0502, 0.2417]") != std::string::npos);
  CHECK(r.out.find("[0.02, 0.2106]") != std::string::npos);
  CHECK(r.out.find("[0.2238, 0.44]") != std::string::npos);
}

TEST_CASE("gate known values") {
  const CliRun clamp = cli({"gate", "and", "0.3", "0.3", "0.2", "0.2", "--rho", "-1", "-1"});
  CHECK(clamp.code == 0);
  double lo, hi;
  REQUIRE(parse_interval(clamp.out, lo, hi));
  CHECK(lo == 0.0);
  CHECK(hi == 0.0);

  const CliRun orr = cli({"gate", "or", "0.5", "0.5", "0.5", "0.5", "--rho", "0", "0"});
  REQUIRE(parse_interval(orr.out, lo, hi));
  CHECK(lo == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(hi == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("gate usage errors exit 2") {
  CHECK(cli({"gate", "and", "0.2", "0.3", "0.45", "0.5"}).code == 2);  // no rho
  CHECK(cli({"gate", "and", "0.2", "0.3", "0.45", "0.5", "--rho", "2"}).code == 2);
  CHECK(cli({"gate", "nope", "0.2", "0.3", "0.45", "0.5", "--rho", "0"}).code == 2);
  CHECK(cli({"gate", "and", "0.4", "0.3", "0.45", "0.5", "--rho", "0"}).code == 2);
}

TEST_CASE("demo pressure-tank") {
  using namespace pressure_tank;
  const fs::path dir = temp_dir() / "demo_tank";
  fs::remove_all(dir);
  const CliRun r = cli({"demo", "pressure-tank", "--dir", dir.string(), "--steps", "100"});
  CHECK(r.code == 0);
  for (Scenario s : kScenarios)
    for (Dependence d : kCases) CHECK(fs::exists(dir / fixture_name(s, d)));
  CHECK(fs::exists(dir / "table5.csv"));
  CHECK(fs::exists(dir / "table6.csv"));

  std::ifstream t5(dir / "table5.csv");
  std::string line;
  std::getline(t5, line);
  CHECK(line == "case,lo,hi");
  std::getline(t5, line);
  double lo, hi;
  char name[64];
  REQUIRE(std::sscanf(line.c_str(), "%63[^,],%lg,%lg", name, &lo, &hi) == 3);
  CHECK(std::string(name) == "independence");
  CHECK(lo == doctest::Approx(2.950e-5).epsilon(0.002));
  CHECK(hi == doctest::Approx(4.053e-5).epsilon(0.002));
}

TEST_CASE("demo copula-grid") {
  const fs::path dir = temp_dir() / "demo_grid";
  fs::remove_all(dir);
  const CliRun r = cli({"demo", "copula-grid", "--dir", dir.string()});
  CHECK(r.code == 0);
  int count = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++count;
    CHECK(e.path().filename().string().rfind("copula_grid_rho_", 0) == 0);
  }
  CHECK(count == 6);
  CHECK(!fs::exists(dir / "copula_grid_rho_0.csv"));
  CHECK(fs::exists(dir / "copula_grid_rho_-0.8.csv"));
  CHECK(fs::exists(dir / "copula_grid_rho_1.csv"));
}

TEST_CASE("demo nope exits 2") {
  CHECK(cli({"demo", "nope"}).code == 2);
}

TEST_CASE("csv and json output are byte-stable") {
  using namespace pressure_tank;
  const fs::path p = write_fixture("stable.ftree",
                                   fixture_text(Scenario::Interval, Dependence::Mixed));
  for (const char* fmt : {"csv", "json"}) {
    const CliRun r1 = cli({"eval", p.string(), "--output", fmt});
    const CliRun r2 = cli({"eval", p.string(), "--output", fmt});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(!r1.out.empty());
  }
  const CliRun j = cli({"eval", p.string(), "--output", "json"});
  CHECK(j.out.find("\"mode\":\"interval\"") != std::string::npos);
}

TEST_CASE("no subcommand exits 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
}

}  // TEST_SUITE
