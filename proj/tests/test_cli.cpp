#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

struct Run {
  int code;
  std::string out;
};

static Run run(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

static std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".kdt"; }

TEST_CASE("invariant subcommands") {
  auto a = run("alexander " + fx("fig8"));
  CHECK(a.code == 0);
  CHECK(a.out == "3 - t - t^-1\n");
  CHECK(run("colored " + fx("unknot0") + " -n 3").out == "1\n");
  for (auto m : {"arcsum", "flow", "rmatrix"})
    CHECK(run("jones " + fx("trefoil_right") + " --method " + m).out == "t + t^3 - t^4\n");
  auto c = run("colored " + fx("fig8") + " -n 2 --method cabled");
  CHECK(c.code == 0);
  CHECK(c.out == run("colored " + fx("fig8") + " -n 2").out);
}

TEST_CASE("verify") {
  auto v = run("verify " + fx("trefoil_right") + " --max-n 2");
  CHECK(v.code == 0);
  CHECK(v.out.find("flow[n=1] vs rmatrix[n=1]: EQUAL\n") != std::string::npos);
  CHECK(v.out.find("flow[n=2] vs sortings[n=2]: EQUAL\n") != std::string::npos);
  CHECK(v.out.find("MISMATCH") == std::string::npos);
  auto f = run("verify " + fx("fig8") + " --max-n 2 --ferm");
  CHECK(f.code == 0);
  CHECK(f.out.find("vs ferm[n=2]: EQUAL") != std::string::npos);
}

TEST_CASE("errors exit 2") {
  CHECK(run("alexander /nonexistent/x.kdt").code == 2);
  {
    std::ofstream o("cli_bad.kdt");
    o << "garbage\n";
  }
  auto r = run("alexander cli_bad.kdt");
  CHECK(r.code == 2);
  CHECK(r.out.find("line 1") != std::string::npos);
  std::remove("cli_bad.kdt");
  CHECK(run("colored " + fx("fig8") + " -n 0").code == 2);
  CHECK(run("jones " + fx("fig8") + " --method bogus").code == 2);
  CHECK(run("nosuchcommand").code == 2);
}

TEST_CASE("deterministic output") {
  std::string args = "selftest zeta --seed 7 --count 5 --degree 4";
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);
  auto q = run("selftest qmm");
  CHECK(q.code == 0);
  CHECK(q.out.find("det_q 2x2: q^0 · a_1.1 a_2.2 - q^-1 · a_2.1 a_1.2") != std::string::npos);
}

TEST_CASE("mmr") {
  auto m = run("mmr " + fx("fig8") + " --orders 10,20,40 --degree 2");
  CHECK(m.code == 0);
  CHECK(m.out.find("limit: [1, 0, 1]") != std::string::npos);
  CHECK(m.out.find("monotone: yes") != std::string::npos);
}
