// End-to-end checks of the binary itself: exit codes, parse errors,
// byte-identical reruns. The CLI path arrives through LEFMON_CLI.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* path = std::getenv("LEFMON_CLI");
  REQUIRE(path != nullptr);
  const std::string cmd = std::string(path) + " " + args + " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli("hilbert --gens 'x^2,x*y,y^2' --n 2 --d 2").exit_code == 0);
  CHECK(run_cli("hilbert --gens 'x^2,q' --n 2 --d 2").exit_code == 1);   // parse error
  CHECK(run_cli("hilbert --gens 'x^2' --n 2 --d 2").exit_code == 1);     // not artinian
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("scan --n 2 --d 2 --exhaustive").exit_code == 0);
}

TEST_CASE("strict mode wants explicit seeds") {
  CHECK(run_cli("--strict slp --mode random --gens 'x^2,x*y,y^2' --n 2 --d 2").exit_code == 1);
  CHECK(run_cli("--strict slp --mode random --seed 4 --gens 'x^2,x*y,y^2' --n 2 --d 2").exit_code ==
        0);
  CHECK(run_cli("--strict scan --n 2 --d 2 --samples 2").exit_code == 1);
  CHECK(run_cli("--strict scan --n 2 --d 2 --samples 2 --seed 4").exit_code == 0);
}

TEST_CASE("reruns are byte-identical") {
  const std::string invocations[] = {
      "wlp --gens 'x1^3,x2^3,x3^3,x1*x2*x3' --n 3 --d 3",
      "scan --n 2 --d-min 2 --d-max 3 --exhaustive --trials 2",
      "scan --n 3 --d 3 --samples 4 --seed 9 --trials 2",
      "slp --mode random --seed 3 --gens 'x^3,y^3,z^3' --n 3 --d 3",
  };
  for (const std::string& inv : invocations) {
    CliResult a = run_cli(inv);
    CliResult b = run_cli(inv);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("ideal file input") {
  const std::string path = "lefmon_cli_test_ideal.json";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("{\"n\": 3, \"d\": 3, \"gens\": [[3,0,0],[0,3,0],[0,0,3],[1,1,1]]}", f);
    fclose(f);
  }
  CliResult r = run_cli("hilbert --ideal " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[1,3,6,6,3,0]") != std::string::npos);
  CHECK(run_cli("hilbert --ideal no_such_file.json").exit_code == 1);
  remove(path.c_str());
}

TEST_CASE("pretty output carries the same fields") {
  CliResult plain = run_cli("betti --gens 'x^2,x*y,y^2' --n 2 --d 2");
  CliResult pretty = run_cli("--pretty betti --gens 'x^2,x*y,y^2' --n 2 --d 2");
  CHECK(plain.exit_code == 0);
  CHECK(pretty.exit_code == 0);
  std::string squashed;
  for (char c : pretty.out)
    if (c != ' ' && c != '\n') squashed += c;
  std::string plain_squashed;
  for (char c : plain.out)
    if (c != ' ' && c != '\n') plain_squashed += c;
  CHECK(squashed == plain_squashed);
}
