#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "volterra/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string tmp = "/tmp/volterra_cli_out.txt";
  const std::string cmd = std::string(VOLTERRA_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

std::string data_file(const std::string& name) { return std::string(VOLTERRA_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("canonical emits a loadable algebra") {
  const std::string path = "/tmp/volterra_canon4.json";
  const RunResult r = run_cli("canonical --dim 4 --out " + path);
  REQUIRE(r.exit_code == 0);
  const volterra::AlgebraSpec a = volterra::load_algebra_file(path);
  REQUIRE(a.dim() == 4);
  REQUIRE(a.p(3, 0) == 1);
  std::remove(path.c_str());
}

TEST_CASE("characters subcommand") {
  const RunResult r = run_cli("characters --algebra " + data_file("canonical3.json") + " --include-trivial");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 4);
  REQUIRE(j[0]["is_trivial"] == true);
  REQUIRE(j[1]["subset"] == json::array({1}));  // 1-based output
}

TEST_CASE("associativity subcommand") {
  const RunResult canon = run_cli("associativity --algebra " + data_file("canonical3.json"));
  REQUIRE(canon.exit_code == 0);
  const json jc = json::parse(canon.out);
  REQUIRE(jc["associative"] == true);
  REQUIRE(jc["by_theorem"] == true);
  REQUIRE(jc["by_tournament"] == true);

  const RunResult cyc = run_cli("associativity --algebra " + data_file("cyclic3.json"));
  const json jy = json::parse(cyc.out);
  REQUIRE(jy["associative"] == false);
  REQUIRE_FALSE(jy["witnesses"].empty());
}

TEST_CASE("tournament subcommand") {
  const RunResult r = run_cli("tournament --algebra " + data_file("cyclic3.json"));
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["extremal"] == true);
  REQUIRE(j["transitive"] == false);
  REQUIRE(j["cyclic_triple"].size() == 3);

  // undefined tournament: zero entries get reported, nonzero exit
  const RunResult sym = run_cli("tournament --algebra " + data_file("symmetric3.json"));
  REQUIRE(sym.exit_code == 2);
  REQUIRE(sym.out.find("zero skew entries") != std::string::npos);
}

TEST_CASE("derivations and local subcommands") {
  const RunResult r = run_cli("derivations --algebra " + data_file("case_a3.json"));
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["dim_space"] == 2);
  REQUIRE(j["basis"].size() == 2);

  const RunResult loc = run_cli("local-check --algebra " + data_file("case_a3.json"));
  const json jl = json::parse(loc.out);
  REQUIRE(jl["equal"] == true);
  REQUIRE(jl["candidate_dim"] == 2);

  const RunResult probe = run_cli("probe-conjecture --algebra " + data_file("symmetric3.json") + " --seed 5");
  const json jp = json::parse(probe.out);
  REQUIRE(jp["outcome"] == "PASS");
}

TEST_CASE("evolve csv output") {
  const RunResult r = run_cli("evolve --algebra " + data_file("case_a3.json") + " --x0 1/2,1/4,1/4 --steps 5");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.rfind("step,x_1,x_2,x_3\n", 0) == 0);
  REQUIRE(r.out.find("# max_drift=") != std::string::npos);

  const RunResult exact = run_cli("evolve --algebra " + data_file("case_a3.json") +
                                  " --x0 1/2,1/4,1/4 --steps 2 --exact");
  REQUIRE(exact.exit_code == 0);
  REQUIRE(exact.out.find("7/16") != std::string::npos);  // first-step coordinate
  REQUIRE(exact.out.find("# max_drift=0 (exact)") != std::string::npos);

  const RunResult off = run_cli("evolve --algebra " + data_file("case_a3.json") + " --x0 1/2,1/2,1/2 --steps 1");
  REQUIRE(off.exit_code == 2);
}

TEST_CASE("sweeps and exit codes") {
  const RunResult r = run_cli("sweep --suite associativity --mode extremal-exhaustive --dim 3 --output text");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("associative: 6") != std::string::npos);

  const RunResult missing_seed = run_cli("sweep --suite characters --mode random --dim 3 --count 5");
  REQUIRE(missing_seed.exit_code == 2);

  const RunResult rand = run_cli("sweep --suite characters --mode random --dim 3 --count 5 --seed 3");
  REQUIRE(rand.exit_code == 0);

  const RunResult dersweep = run_cli("derivation-sweep-3d --grid 0,1/2,1 --output csv");
  REQUIRE(dersweep.exit_code == 0);
  REQUIRE(dersweep.out.rfind("algebra,p12_1,p13_1,p23_2,condition,dim_space", 0) == 0);

  const RunResult extsweep = run_cli("sweep-extremal --dim 4 --output text");
  REQUIRE(extsweep.exit_code == 0);
  REQUIRE(extsweep.out.find("associative: 24") != std::string::npos);
}

TEST_CASE("malformed input reports an error") {
  const std::string path = "/tmp/volterra_bad_algebra.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 2, "form": "coeffs", "matrix": [[1, 0.5], [0.5, 1]]})";
  }
  const RunResult r = run_cli("characters --algebra " + path);
  REQUIRE(r.exit_code == 2);
  REQUIRE(r.out.find("float") != std::string::npos);
  std::remove(path.c_str());
}
