#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string src_dir() {
  const char* p = std::getenv("KOSZUL_SRC_DIR");
  return p ? p : ".";
}

std::string cli_bin() {
  const char* p = std::getenv("KOSZUL_CLI_BIN");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// run the CLI with stderr dropped; stdout and exit status captured
RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = cli_bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string ring(const std::string& name) {
  return src_dir() + "/rings/" + name;
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("series of the filtered ring prints exactly") {
  RunResult r = run("hilbert " + ring("filtration_koszul.ring"));
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "(1+2z-2z^2-2z^3+2z^4)/(1-z)^2");
}

TEST_CASE("obstructed h-polynomial search reports emptiness") {
  RunResult r = run("lg-search --h 1,2,-2,-2,2 --max-extra-vars 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("no quadratic monomial ideal found") != std::string::npos);
}

TEST_CASE("residue-field table over the crossterm ring shows the (3,4) entry") {
  RunResult r = run("betti --module K --over R " + ring("squares_crossterm.ring"));
  CHECK(r.exit_code == 0);
  // diagram row 1 (degree = row + column) carries the 5 at column 3
  CHECK(r.out.find("1 | . .  .  5") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
  for (const std::string args :
       {"hilbert " + ring("filtration_koszul.ring"),
        "--json koszul-report " + ring("squares_crossterm.ring"),
        "--json betti --module K --over R " + ring("squares_crossterm.ring"),
        "gb " + ring("filtration_koszul.ring") + " --order lex",
        "--json lg-search --h 1,3,0,-3 --max-extra-vars 3",
        "--json veronese " + ring("poly3.ring") + " -c 2"}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("JSON output opens with the schema marker") {
  RunResult r = run("--json hilbert " + ring("poly2.ring"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("{\n  \"schema\": 1,\n  \"command\": \"hilbert\"") == 0);
}

TEST_CASE("verdict exit codes: negative, certified, inconclusive") {
  CHECK(run("koszul-report " + ring("squares_crossterm.ring")).exit_code == 1);
  CHECK(run("koszul-report " + ring("filtration_koszul.ring")).exit_code == 0);
  CHECK(run("koszul-report " + ring("lg_quadratic_lift.ring")).exit_code == 3);
  // the same ring certifies once the initial-ideal search is allowed
  CHECK(run("koszul-report --g-search " + ring("monomial_pair.ring")).exit_code == 0);
}

TEST_CASE("input failures exit 2") {
  CHECK(run("hilbert " + ring("no_such_file.ring")).exit_code == 2);
  CHECK(run("rees-ci " + ring("filtration_koszul.ring")).exit_code == 2);
  CHECK(run("ci-lift " + ring("cusp_point.ring")).exit_code == 2);
  CHECK(run("betti --module K --over S " + ring("poly2.ring")).exit_code == 2);
  CHECK(run("gb " + ring("poly2.ring") + " --order mystery").exit_code == 2);
}

TEST_CASE("filtration and colon subcommands verify and refute") {
  CHECK(run("filtration-verify " + ring("filtration_koszul.ring")).exit_code == 0);
  CHECK(run("filtration-verify " + ring("poly2.ring")).exit_code == 2);
  CHECK(run("strongly-koszul " + ring("monomial_pair.ring")).exit_code == 0);
  CHECK(run("strongly-koszul " + ring("filtration_koszul.ring")).exit_code == 1);
}

TEST_CASE("emitted presentations feed back into the tool") {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/cli_roundtrip.ring";
  RunResult emit = run("veronese " + ring("poly2.ring") + " -c 3 --emit " + tmp);
  REQUIRE(emit.exit_code == 0);
  RunResult h = run("hilbert " + tmp);
  CHECK(h.exit_code == 0);
  CHECK(first_line(h.out) == "(1+2z)/(1-z)^2");
  std::remove(tmp.c_str());
}

TEST_CASE("emitted Rees ring drives the diagonal subcommand") {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/cli_rees.ring";
  REQUIRE(run("rees-ci " + ring("two_squares_sequence.ring") + " --emit " + tmp)
              .exit_code == 0);
  RunResult d = run("diagonal " + tmp + " --c1 1 --c2 1");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("kernel minimal generator degrees: 2 2 2") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("consistency subcommands succeed on the known grids") {
  CHECK(run("cs-check -m 2 -n 3 --box 2").exit_code == 0);
  CHECK(run("identity-check -n 3 --b 2,1,3").exit_code == 0);
  RunResult lift = run("ci-lift " + ring("three_quadrics_ci.ring"));
  CHECK(lift.exit_code == 0);
  CHECK(lift.out.find("(1+3z+3z^2+z^3)/(1-z)^3") != std::string::npos);
}

TEST_CASE("timings go to stderr, never stdout") {
  RunResult plain = run("hilbert " + ring("poly2.ring"));
  RunResult timed = run("--timings hilbert " + ring("poly2.ring"));
  CHECK(plain.out == timed.out);
}
