#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

#ifndef WITTKIT_CLI_PATH
#error "WITTKIT_CLI_PATH must be defined"
#endif

std::string cli() { return std::string(WITTKIT_CLI_PATH); }

int run(const std::string& args, const std::string& out_path = "/dev/null") {
  std::string cmd = cli() + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("suite runs and reports deterministically") {
    std::string j1 = "/tmp/wittkit_cli_a.json";
    std::string j2 = "/tmp/wittkit_cli_b.json";
    CHECK(run("suite magique --trials 25 --seed 9 --json " + j1) == 0);
    CHECK(run("suite magique --trials 25 --seed 9 --json " + j2) == 0);
    std::string a = slurp(j1);
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(j2));
    CHECK(a.find("\"passed\": true") != std::string::npos);
  }

  TEST_CASE("unknown suite exits 2") { CHECK(run("suite nonsense") == 2); }

  TEST_CASE("eval-quad") {
    std::string out = "/tmp/wittkit_cli_quad.txt";
    CHECK(run("eval-quad --form '[\"1\",\"-1\"]' --inv Q:2,2", out) == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"witt_filtration_degree\": \"inf\"") != std::string::npos);
    CHECK(run("eval-quad --form '[\"1\",\"-2\"]' --inv P:2,2", out) == 0);
    text = slurp(out);
    CHECK(text.find("witt_filtration_degree") != std::string::npos);
    CHECK(text.find("cohomology") != std::string::npos);
    CHECK(run("eval-quad --form '[\"1\",\"oops\"]' --inv P:2,2") == 2);
    CHECK(run("eval-quad --form '[\"1\",\"0\"]' --inv P:2,2") == 2);
    CHECK(run("eval-quad --form '[\"1\",\"2\"]' --inv bogus:1") == 2);
  }

  TEST_CASE("eval-herm") {
    std::string out = "/tmp/wittkit_cli_herm.txt";
    std::string base = "eval-herm --algebra '{\"a\":\"-1\",\"b\":\"-1\"}' "
                       "--gens '[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"]]'";
    CHECK(run(base + " --inv Qherm:4,4", out) == 0);
    CHECK(slurp(out).find("\"gw\"") != std::string::npos);
    CHECK(run(base + " --inv psi0:[0],[1]", out) == 0);
    CHECK(run(base + " --inv betahat:4", out) == 0);
    CHECK(slurp(out).find("cohomology") != std::string::npos);
    CHECK(run(base + " --inv Qherm:3,1") == 2);  // n must be twice the slot count
    CHECK(run("eval-herm --algebra '{\"a\":\"0\",\"b\":\"1\"}' "
              "--gens '[[\"1\",\"0\",\"0\"]]' --inv Qherm:2,2") == 2);
  }

  TEST_CASE("flags") {
    CHECK(run("suite sum-prd --trials 15 --seed 3 --coeff-pool '1,-1,2,-3'") == 0);
    CHECK(run("suite group-algebra --exhaustive --max-set-size 2") == 0);
    std::string out = "/tmp/wittkit_cli_pg.txt";
    CHECK(run("eval-quad --form '[[\"1\",\"-2\"],[\"3\",\"5\"]]' --inv 'Pgamma:[1,2]'", out) == 0);
    CHECK(slurp(out).find("witt_filtration_degree") != std::string::npos);
    CHECK(run("eval-quad --form '[\"1\",\"2\"]' --inv 'Pgamma:[1'") == 2);
  }

  TEST_CASE("list and version") {
    std::string out = "/tmp/wittkit_cli_list.txt";
    CHECK(run("list", out) == 0);
    std::string text = slurp(out);
    CHECK(text.find("magique") != std::string::npos);
    CHECK(text.find("qnd-quat") != std::string::npos);
    CHECK(run("--version", out) == 0);
  }
}
