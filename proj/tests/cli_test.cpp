#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int code;
  std::string out;
};

// Runs the CLI with the given arguments, capturing stdout+stderr.
RunResult run(const std::string& args) {
  std::string cmd = std::string(HOMSHIFT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& rel) {
  return std::string(HOMSHIFT_DATA_DIR) + "/" + rel;
}

std::string write_tmp(const std::string& name, const std::string& content) {
  std::string path = "cli_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("hs subcommand") {
  std::string tri = data("ideals/triangle.ideal");
  RunResult r = run("hs " + tri + " --k 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("x1*x2*x3") != std::string::npos);

  // default k is 1; k=0 returns the ideal itself
  RunResult r0 = run("hs " + tri + " --k 0");
  CHECK(r0.code == 0);
  CHECK(r0.out.find("x1*x2") != std::string::npos);

  // both routes agree
  CHECK(run("hs " + tri + " --k 1 --route betti").out == r.out);
  CHECK(run("hs " + tri + " --k 1 --route linquot").out == r.out);

  // --json
  RunResult j = run("hs " + tri + " --k 1 --json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"gens\"") != std::string::npos);
  CHECK(j.out.find("\"routes_agree\": true") != std::string::npos);
}

TEST_CASE("hs on an ideal without linear quotients") {
  std::string path = write_tmp("nolq.ideal", "n=2\nx1^2, x2^2\n");
  // the linquot route cannot apply: input error
  CHECK(run("hs " + path + " --k 1 --route linquot").code == 2);
  // the betti route still works
  RunResult r = run("hs " + path + " --k 1 --route betti");
  CHECK(r.code == 0);
  CHECK(r.out.find("x1^2*x2^2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("hs resource cap exits 3") {
  std::string tri = data("ideals/triangle.ideal");
  CHECK(run("hs " + tri + " --k 1 --route linquot --max-gens 2").code == 3);
}

TEST_CASE("betti subcommand") {
  RunResult r = run("betti " + data("ideals/triangle.ideal"));
  CHECK(r.code == 0);
  CHECK(r.out.find("0 1") != std::string::npos);
  CHECK(r.out.find("2 3 2") != std::string::npos);

  RunResult j = run("betti " + data("ideals/triangle.ideal") + " --json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"rank\"") != std::string::npos);
}

TEST_CASE("graph subcommand") {
  std::string claw = write_tmp("claw.graph", "n 4\n1 2\n1 3\n1 4\n");
  RunResult r = run("graph " + claw);
  CHECK(r.code == 0);
  CHECK(r.out.find("chordal: yes") != std::string::npos);
  CHECK(r.out.find("reversible: no") != std::string::npos);
  CHECK(r.out.find("proper interval: no") != std::string::npos);

  RunResult j = run("graph " + claw + " --json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"chordal\"") != std::string::npos);
  std::remove(claw.c_str());

  std::string c4 = write_tmp("c4.graph", "n 4\n1 2\n2 3\n3 4\n1 4\n");
  RunResult c = run("graph " + c4);
  CHECK(c.code == 0);
  CHECK(c.out.find("chordal: no") != std::string::npos);
  // witness cycle is printed
  CHECK(c.out.find("induced cycle") != std::string::npos);
  std::remove(c4.c_str());
}

TEST_CASE("reproduce subcommand") {
  for (const char* id : {"ex1.4", "ex2.3", "ex2.10a", "ex2.10b"}) {
    RunResult r = run(std::string("reproduce ") + id);
    INFO(id, ": ", r.out);
    CHECK(r.code == 0);
  }
  CHECK(run("reproduce ex0.0").code == 2);
}

TEST_CASE("fuzz subcommand") {
  RunResult r = run("fuzz T1.3 --count 5 --seed 11");
  CHECK(r.code == 0);
  CHECK(r.out.find("pass=5") != std::string::npos);

  // deterministic across --jobs
  RunResult a = run("fuzz T4.7 --count 8 --seed 3 --jobs 1 --json");
  RunResult b = run("fuzz T4.7 --count 8 --seed 3 --jobs 4 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  // a campaign that finds counterexamples exits 1 and serializes them
  RunResult t26 = run("fuzz T2.6 --count 40 --seed 42 --json");
  CHECK(t26.code == 1);
  CHECK(t26.out.find("verdict=FAIL") != std::string::npos);

  CHECK(run("fuzz T9.9 --count 1").code == 2);
}

TEST_CASE("bad input handling") {
  CHECK(run("hs no_such_file.ideal").code == 2);
  std::string bad = write_tmp("bad.ideal", "x1*x2\n");  // missing header
  CHECK(run("hs " + bad).code == 2);
  std::remove(bad.c_str());
  CHECK(run("").code == 2);          // missing subcommand
  CHECK(run("--help").code == 0);
}
