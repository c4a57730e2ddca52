#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "logcoeff/json_io.hpp"

#ifndef LOGCOEFF_CLI_PATH
#error "LOGCOEFF_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + std::string(LOGCOEFF_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("coeffs: F(3) extremal prints the exact rationals") {
    const RunResult r = run("coeffs --class F --c 3 --extremal --n 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "3/4"));
    CHECK(contains(r.out, "7/16"));
    CHECK(contains(r.out, "5/16"));
    CHECK(contains(r.out, "31/128"));
    CHECK(contains(r.out, "63/320"));
    CHECK(contains(r.out, "backend=exact"));  // config echo
  }

  TEST_CASE("coeffs: starlike extremal gives 1, 1/2, 1/3") {
    const RunResult r = run("coeffs --class janowski --A 1 --B -1 --extremal --n 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "1/2"));
    CHECK(contains(r.out, "1/3"));
  }

  TEST_CASE("coeffs: G(1) twist 2 has gamma_1 = 0 and |gamma_2| = 1/12") {
    const RunResult r = run("coeffs --class G --c 1 --twist 2 --extremal --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "-1/12"));
  }

  TEST_CASE("coeffs: json output parses and carries the config") {
    const RunResult r = run("coeffs --class G --c 1 --extremal --n 4 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("config"));
    CHECK(j.at("spec").at("kind") == "G");
    CHECK(j.at("rows").size() == 4);
    // twist-1 extremal: f = z - z^2/2, gamma_1 = -1/4 (attains c/4), gamma_3 = -1/48
    CHECK(j.at("rows")[0].at("gamma") == "-1/4");
    CHECK(j.at("rows")[2].at("gamma") == "-1/48");
    // the gamma vector uses the exact-backend wire form: "p/q" strings
    CHECK(j.at("gamma_vector")[0] == "-1/4");
    CHECK(j.at("gamma_vector")[2] == "-1/48");

    // float backend serializes [re, im] pairs
    const RunResult rf =
        run("coeffs --class G --c 1 --extremal --n 2 --backend float --format json");
    const auto jf = nlohmann::json::parse(rf.out);
    CHECK(jf.at("gamma_vector")[0].is_array());
    CHECK(jf.at("gamma_vector")[0][0].get<double>() == doctest::Approx(-0.25).epsilon(1e-14));
  }

  TEST_CASE("verify: proven bounds hold and the exit code is 0") {
    const RunResult r = run("verify --class G --c 1 --n 8 --samples 200 --seed 7 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("violations").empty());
    CHECK(j.at("seed") == 7);
  }

  TEST_CASE("verify: malformed spec exits 2 with a usage message") {
    CHECK(run("verify --class G --n 8").exit_code == 2);   // missing --c
    CHECK(run("verify --class Q --c 1").exit_code == 2);   // unknown class
    CHECK(run("verify").exit_code == 2);                   // no class at all
    CHECK(run("nonsense").exit_code == 2);                 // unknown subcommand
  }

  TEST_CASE("phi: covered and uncovered regions") {
    const RunResult d2 = run("phi --mu 1 --upsilon 1");
    CHECK(d2.exit_code == 0);
    CHECK(contains(d2.out, "D2"));
    const RunResult gap = run("phi --mu 3 --upsilon 1.3");
    CHECK(gap.exit_code == 3);
    CHECK(contains(gap.out, "uncovered"));
  }

  TEST_CASE("dilog: value and domain handling") {
    const RunResult ok = run("dilog --x 1");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "1.64493406684822"));
    CHECK(run("dilog --x 2").exit_code == 3);
  }

  TEST_CASE("explore: runs and reports no finding") {
    const RunResult r = run("explore --conjecture G_general --budget 2000 --seed 1");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("finding") == false);
    CHECK(j.at("rows").size() == 24);
  }

  TEST_CASE("byte-identical output for identical invocation and seed") {
    const std::string cmd = "verify --class F --c 3 --n 6 --samples 150 --seed 9 --format json";
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // worker count must not matter either
    const RunResult solo = run(cmd, "LOGCOEFF_THREADS=1 ");
    const RunResult quad = run(cmd, "LOGCOEFF_THREADS=4 ");
    CHECK(solo.out == quad.out);
    CHECK(solo.out == a.out);
  }

  TEST_CASE("schwarz and spec files round-trip through the documented schemas") {
    const std::string dir = "/tmp/logcoeff_cli_test";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    {
      std::ofstream f(dir + "/phi.json");
      f << R"({"schur": [[0,0],[1,0]]})";
    }
    {
      std::ofstream f(dir + "/spec.json");
      f << R"({"kind": "G", "c": "1", "twist": 1})";
    }
    const RunResult r =
        run("coeffs --spec " + dir + "/spec.json --schwarz " + dir + "/phi.json --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "-1/12"));  // phi = z^2 member of G(1)

    const RunResult missing = run("coeffs --spec " + dir + "/nope.json");
    CHECK(missing.exit_code == 2);
  }

  TEST_CASE("spec and schwarz JSON schemas round-trip in both directions") {
    using namespace logcoeff;
    for (const auto& spec :
         {ClassSpec::janowski_spec(Rational(3, 4), Rational(-1, 2), Rational(1, 8), 2),
          ClassSpec::spiral_spec(0.4, 0.2), ClassSpec::strongly_starlike_spec(Rational(2, 3)),
          ClassSpec::F_spec(Rational(5, 2), 3), ClassSpec::G_spec(1)}) {
      const ClassSpec back = spec_from_json(spec_to_json(spec));
      CHECK(back.describe() == spec.describe());
      CHECK(spec_to_json(back).dump() == spec_to_json(spec).dump());
    }
    const std::vector<Complex> schur = {{0.25, -0.5}, {0.0, 0.0}, {1.0, 0.0}};
    const auto back = schur_from_json(schur_to_json(schur));
    REQUIRE(back.size() == schur.size());
    for (size_t i = 0; i < schur.size(); ++i) CHECK(back[i] == schur[i]);
  }

  TEST_CASE("table: CSV with bound metadata columns") {
    const RunResult r = run("table --class G --c 1 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "class,params,quantity,n,bound,exact,sharp,conjectural,applicable,citation"));
    CHECK(contains(r.out, "gamma-prior"));
    CHECK(contains(r.out, "conjecture-G"));
    const RunResult j = run("table --class F --c 3 --n 6 --format json");
    CHECK(j.exit_code == 0);
    CHECK(nlohmann::json::parse(j.out).at("rows").size() > 0);
  }
}
