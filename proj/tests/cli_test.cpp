#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "superalg/cli/run.h"

using namespace superalg::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const RunConfig& config) {
  std::ostringstream out, err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig command(const std::string& name) {
  RunConfig c;
  c.command = name;
  return c;
}

nlohmann::json as_json(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_CASE("verify-zero") {
  const Outcome o = invoke(command("verify-zero"));
  CHECK(o.code == 0);
  const auto j = as_json(o);
  CHECK(j["relations"] == 8);
  CHECK(j["failed"] == 0);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "verify-zero");
}

TEST_CASE("spectrum-algebraic") {
  RunConfig c = command("spectrum-algebraic");
  c.couplings = {"1", "0", "0.75", "0.75"};
  c.nmax = 2;
  const auto j = as_json(invoke(c));
  REQUIRE(j["levels"].size() == 3);
  CHECK(j["levels"][0]["E"] == 10);
  CHECK(j["levels"][1]["E"] == 14);
  CHECK(j["levels"][2]["E"] == 18);
  CHECK(j["levels"][1]["tuples"].size() == 3);
  CHECK(j["couplings"] == nlohmann::json::array({"1", "0", "3/4", "3/4"}));

  c.format = OutputFormat::Csv;
  const Outcome csv = invoke(c);
  CHECK(csv.out.rfind("N,E,multiplicity,tuples\n0,10,1,0 0 0 0\n", 0) == 0);
}

TEST_CASE("compare") {
  RunConfig c = command("compare");
  c.couplings = {"1", "0", "0.75", "0.75"};
  c.levels = 5;
  c.tol = 5e-3;
  const Outcome o = invoke(c);
  CHECK(o.code == 0);
  const auto j = as_json(o);
  CHECK(j["agree"] == true);
  CHECK(j["rows"].size() == 5);
  CHECK(j["max_delta"].get<double>() < 5e-3);

  c.tol = 1e-9;
  CHECK(invoke(c).code == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* name : {"spectrum-numeric", "structure-function", "casimir"}) {
    RunConfig c = command(name);
    c.nmax = 1;
    CHECK(invoke(c).out == invoke(c).out);
  }
}

TEST_CASE("number formatting") {
  CHECK(round_significant(1.0 / 3) == 0.333333333333);
  CHECK(format_double(2.0 / 3) == "0.666666666667");
  CHECK(normalize_numbers(nlohmann::json{{"x", 1.0 / 7}}).dump() == R"({"x":0.142857142857})");
  CHECK(normalize_numbers(nlohmann::json{{"n", 3}}).dump() == R"({"n":3})");
  CHECK(rational_text(superalg::Rational(-3, 4)) == "-3/4");
}

TEST_CASE("structure-function") {
  RunConfig c = command("structure-function");
  c.sub = 1;
  c.energy = "22";
  c.nmax = 3;
  auto j = as_json(invoke(c));
  CHECK(j["exact"] == true);
  CHECK(j["E"] == "22");
  CHECK(j["prefactor"] == "1/1024");
  REQUIRE(j["representations"].size() == 1);
  bool positive = false;
  for (const auto& s : j["representations"][0]["solutions"]) positive = positive || s["positive"].get<bool>();
  CHECK(positive);

  c.scan = true;
  CHECK(as_json(invoke(c))["representations"].size() == 4);

  RunConfig irrational = command("structure-function");
  irrational.couplings = {"2", "0", "0", "0"};
  CHECK(invoke(irrational).code == 2);
  irrational.use_float = true;
  CHECK(as_json(invoke(irrational))["exact"] == false);

  c.sub = 3;
  CHECK(invoke(c).code == 2);
}

TEST_CASE("eval") {
  RunConfig c = command("eval");
  c.expression = "{x1,p1}";
  c.format = OutputFormat::Text;
  CHECK(invoke(c).out == "(-i) + (2)*x1*p1\n");
  c.expression = "A1";
  c.commutator_with = "H";
  CHECK(invoke(c).out == "0\n");

  c.commutator_with.reset();
  c.expression = "p1^-1";
  const Outcome bad = invoke(c);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 3") != std::string::npos);
  c.expression = "c1^7";
  CHECK(invoke(c).code == 2);
}

TEST_CASE("equivalence-check reports the literal paraboloidal offset") {
  const Outcome o = invoke(command("equivalence-check"));
  CHECK(o.code == 1);
  const auto j = as_json(o);
  CHECK(j["literal_holds"] == false);
  CHECK(j["corrected_holds"] == true);
}

TEST_CASE("convergence csv") {
  RunConfig c = command("convergence");
  c.method = "axial";
  c.grid = 250;
  c.format = OutputFormat::Csv;
  const Outcome o = invoke(c);
  CHECK(o.code == 0);
  CHECK(o.out.rfind("grid,eigenvalue,error\n250,", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke(command("no-such-command")).code == 2);
  RunConfig c = command("spectrum-algebraic");
  c.couplings[0] = "0";
  CHECK(invoke(c).code == 2);
  c.couplings[0] = "abc";
  CHECK(invoke(c).code == 2);
  c = command("spectrum-numeric");
  c.method = "spherical";
  CHECK(invoke(c).code == 2);
  c = command("verify-zero");
  c.format = OutputFormat::Csv;
  CHECK(invoke(c).code == 2);
  c = command("audit-algebra");
  c.relations = {"[A1,H]"};
  CHECK(invoke(c).code == 2);
}

TEST_CASE("exit code follows synthetic relation audits") {
  std::mt19937 rng(11);
  const char* zero_pairs[] = {"[A1,H]", "[A2,H]", "[B1,H]", "[A1,A2]"};
  std::uniform_int_distribution<int> pick(0, 3), coin(0, 1), shift(1, 9);
  for (int trial = 0; trial < 12; ++trial) {
    RunConfig c = command("audit-algebra");
    const std::string lhs = zero_pairs[pick(rng)];
    const bool broken = coin(rng) == 1;
    c.relations = {lhs + " = " + (broken ? std::to_string(shift(rng)) + "*c1" : "0")};
    const Outcome o = invoke(c);
    CHECK(o.code == (broken ? 1 : 0));
    CHECK(as_json(o)["mismatches"] == (broken ? 1 : 0));
  }
}

TEST_CASE("report written to a file") {
  RunConfig c = command("verify-zero");
  c.output = "cli_test_report.json";
  const Outcome o = invoke(c);
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(c.output);
  CHECK(nlohmann::json::parse(in)["relations"] == 8);
  std::remove(c.output.c_str());
}
