#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adderforge/architectures.hpp"
#include "adderforge/cli.hpp"
#include "adderforge/export.hpp"
#include "adderforge/json_io.hpp"
#include "doctest.h"

using namespace adderforge;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("adderforge");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  int code = -1;
  try {
    code = cli_main(static_cast<int>(argv.size()), argv.data());
  } catch (...) {
    std::cout.rdbuf(old);
    throw;
  }
  std::cout.rdbuf(old);
  return {code, captured.str()};
}

fs::path temp_file(const std::string& name) {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "adderforge_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build writes a loadable netlist") {
  const fs::path out = temp_file("bec16.json");
  const CliResult result = run_cli({"build", "--arch", "sqrt-csla-bec",
                                    "--width", "16", "--out", out.string()});
  CHECK(result.code == 0);
  CHECK(result.out.find("sqrt-csla-bec/16") != std::string::npos);

  const Netlist netlist = load_netlist(out);
  CHECK(validate(netlist).empty());
  CHECK(netlist.width == 16);
}

TEST_CASE("build rejects a width-1 carry-select request with exit 2") {
  const fs::path out = temp_file("w1.json");
  const CliResult result = run_cli({"build", "--arch", "sqrt-csla-bec",
                                    "--width", "1", "--out", out.string()});
  CHECK(result.code == 2);
}

TEST_CASE("unknown flags and missing subcommands are usage errors") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"build", "--nonsense"}).code == 2);
}

TEST_CASE("simulate prints the documented decimal notation") {
  const fs::path out = temp_file("bec64.json");
  REQUIRE(run_cli({"build", "--arch", "sqrt-csla-bec", "--width", "64",
                   "--out", out.string()})
              .code == 0);

  const CliResult result =
      run_cli({"simulate", "--in", out.string(), "--a", "25567", "--b",
               "22212", "--cin", "1"});
  CHECK(result.code == 0);
  CHECK(result.out == "Sum=47780 Cout=0\n");
}

TEST_CASE("simulate accepts 0x-prefixed operands") {
  const fs::path out = temp_file("bec64.json");
  REQUIRE(run_cli({"build", "--arch", "sqrt-csla-bec", "--width", "64",
                   "--out", out.string()})
              .code == 0);
  const CliResult result = run_cli(
      {"simulate", "--in", out.string(), "--a", "0x63df", "--b", "0x56c4",
       "--cin", "1"});
  CHECK(result.code == 0);
  CHECK(result.out == "Sum=47780 Cout=0\n");
}

TEST_CASE("simulate rejects malformed and oversized operands") {
  const fs::path out = temp_file("rca4.json");
  REQUIRE(run_cli({"build", "--arch", "rca", "--width", "4", "--out",
                   out.string()})
              .code == 0);
  CHECK(run_cli({"simulate", "--in", out.string(), "--a", "sixteen", "--b",
                 "0"})
            .code == 2);
  CHECK(run_cli({"simulate", "--in", out.string(), "--a", "16", "--b", "0"})
            .code == 2);
}

TEST_CASE("missing input files exit with code 3") {
  CHECK(run_cli({"simulate", "--in", "/nonexistent/x.json", "--a", "1", "--b",
                 "2"})
            .code == 3);
  CHECK(run_cli({"analyze", "--in", "/nonexistent/x.json"}).code == 3);
}

TEST_CASE("a tampered netlist file fails validation with exit 3") {
  const fs::path out = temp_file("tampered.json");
  REQUIRE(run_cli({"build", "--arch", "rca", "--width", "2", "--out",
                   out.string()})
              .code == 0);
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  const std::size_t pos = text.find("\"XOR2\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"QNAND\"");
  std::ofstream(out) << text;

  CHECK(run_cli({"simulate", "--in", out.string(), "--a", "1", "--b", "1"})
            .code == 3);
}

TEST_CASE("analyze reports area and delay, with optional per-group table") {
  const fs::path out = temp_file("bec16a.json");
  REQUIRE(run_cli({"build", "--arch", "sqrt-csla-bec", "--width", "16",
                   "--out", out.string()})
              .code == 0);

  const CliResult plain = run_cli({"analyze", "--in", out.string()});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("area: 336 units") != std::string::npos);
  CHECK(plain.out.find("critical delay: 22 units") != std::string::npos);

  const CliResult grouped =
      run_cli({"analyze", "--in", out.string(), "--per-group"});
  CHECK(grouped.code == 0);
  CHECK(grouped.out.find("| 2") != std::string::npos);
  CHECK(grouped.out.find("43") != std::string::npos);
}

TEST_CASE("analyze honors a cost model override file") {
  const fs::path netlist_file = temp_file("rca8.json");
  REQUIRE(run_cli({"build", "--arch", "rca", "--width", "8", "--out",
                   netlist_file.string()})
              .code == 0);

  const fs::path model_file = temp_file("flat.cost");
  std::ofstream(model_file) << "XOR2 1 1\nMUX2 1 1\n";

  const CliResult result = run_cli({"analyze", "--in", netlist_file.string(),
                                    "--cost-model", model_file.string()});
  CHECK(result.code == 0);
  // 8 FAs at 2 XOR + 2 AND + 1 OR with XOR downweighted to 1: 5 units each.
  CHECK(result.out.find("area: 40 units") != std::string::npos);
}

TEST_CASE("verify exits 0 on a clean build and 1 on a corrupted one") {
  const fs::path good = temp_file("good6.json");
  REQUIRE(run_cli({"build", "--arch", "sqrt-csla-bec", "--width", "6",
                   "--out", good.string()})
              .code == 0);
  const CliResult pass =
      run_cli({"verify", "--in", good.string(), "--exhaustive"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);

  // Corrupt the logic but keep the document structurally valid: turn an OR2
  // into AND2 so validation passes while addition breaks.
  Netlist broken = load_netlist(good);
  for (Gate& gate : broken.gates)
    if (gate.kind == GateKind::Or2) {
      gate.kind = GateKind::And2;
      break;
    }
  const fs::path bad = temp_file("bad6.json");
  save_netlist(broken, bad);

  const CliResult fail =
      run_cli({"verify", "--in", bad.string(), "--exhaustive"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);
  CHECK(fail.out.find("expected Sum=") != std::string::npos);
}

TEST_CASE("verify --random is seeded and reports the vector count") {
  const fs::path out = temp_file("dual16.json");
  REQUIRE(run_cli({"build", "--arch", "sqrt-csla", "--width", "16", "--out",
                   out.string()})
              .code == 0);
  const CliResult a = run_cli({"verify", "--in", out.string(), "--random",
                               "1000", "--seed", "9"});
  const CliResult b = run_cli({"verify", "--in", out.string(), "--random",
                               "1000", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed 9") != std::string::npos);
}

TEST_CASE("the exhaustive cap honors ADDER_FORGE_EXHAUSTIVE_CAP") {
  const fs::path out = temp_file("bec6cap.json");
  REQUIRE(run_cli({"build", "--arch", "sqrt-csla-bec", "--width", "6",
                   "--out", out.string()})
              .code == 0);

  setenv("ADDER_FORGE_EXHAUSTIVE_CAP", "4", 1);
  const CliResult blocked =
      run_cli({"verify", "--in", out.string(), "--exhaustive"});
  unsetenv("ADDER_FORGE_EXHAUSTIVE_CAP");
  CHECK(blocked.code == 2);

  const CliResult allowed =
      run_cli({"verify", "--in", out.string(), "--exhaustive"});
  CHECK(allowed.code == 0);
}

TEST_CASE("compare renders markdown or CSV") {
  const CliResult md = run_cli({"compare", "--arch-a", "sqrt-csla",
                                "--arch-b", "sqrt-csla-bec", "--width", "64"});
  CHECK(md.code == 0);
  CHECK(md.out.find("| area (units)") != std::string::npos);
  CHECK(md.out.find("1856") != std::string::npos);
  CHECK(md.out.find("1422") != std::string::npos);

  const CliResult csv =
      run_cli({"compare", "--arch-a", "sqrt-csla", "--arch-b",
               "sqrt-csla-bec", "--width", "64", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("metric,") == 0);
}

TEST_CASE("compare rejects invalid widths with exit 2") {
  CHECK(run_cli({"compare", "--arch-a", "rca", "--arch-b", "sqrt-csla-bec",
                 "--width", "1"})
            .code == 2);
}

TEST_CASE("export writes Verilog that passes the lint and DOT that renders") {
  const fs::path netlist_file = temp_file("bec32.json");
  REQUIRE(run_cli({"build", "--arch", "sqrt-csla-bec", "--width", "32",
                   "--out", netlist_file.string()})
              .code == 0);

  const fs::path verilog_file = temp_file("bec32.v");
  const CliResult verilog = run_cli({"export", "--in", netlist_file.string(),
                                     "--to", "verilog", "--out",
                                     verilog_file.string()});
  CHECK(verilog.code == 0);
  std::ifstream vin(verilog_file);
  std::stringstream vtext;
  vtext << vin.rdbuf();
  CHECK(vtext.str().find("module sqrt_csla_bec_32") != std::string::npos);
  CHECK(lint_verilog(vtext.str()).empty());

  const fs::path dot_file = temp_file("bec32.dot");
  const CliResult dot = run_cli({"export", "--in", netlist_file.string(),
                                 "--to", "dot", "--out", dot_file.string()});
  CHECK(dot.code == 0);
  std::ifstream din(dot_file);
  std::stringstream dtext;
  dtext << din.rdbuf();
  CHECK(dtext.str().find("digraph") != std::string::npos);
}

TEST_CASE("build accepts custom group plans") {
  const fs::path out = temp_file("custom8.json");
  const CliResult result =
      run_cli({"build", "--arch", "sqrt-csla-bec", "--width", "8", "--groups",
               "3,3,2", "--out", out.string()});
  CHECK(result.code == 0);
  CHECK(load_netlist(out).groups == std::vector<int>{3, 3, 2});

  CHECK(run_cli({"build", "--arch", "sqrt-csla-bec", "--width", "8",
                 "--groups", "2,2", "--out", out.string()})
            .code == 2);
}

}  // TEST_SUITE
