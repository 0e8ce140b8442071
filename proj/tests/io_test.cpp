#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "homshift/io.hpp"

using namespace homshift;

TEST_CASE("parse_monomial") {
  CHECK(parse_monomial("x1^2*x3", 4).exps() == std::vector<int>{2, 0, 1, 0});
  // the '*' separator is optional
  CHECK(parse_monomial("x1x2", 3) == parse_monomial("x1*x2", 3));
  CHECK(parse_monomial("x2^3", 2).exps() == std::vector<int>{0, 3});
  CHECK(parse_monomial("1", 3).is_one());
  CHECK_THROWS_AS(parse_monomial("x5", 4), ParseError);
  CHECK_THROWS_AS(parse_monomial("x0", 4), ParseError);
  CHECK_THROWS_AS(parse_monomial("y1", 4), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1^", 4), ParseError);
  CHECK_THROWS_AS(parse_monomial("", 4), ParseError);
}

TEST_CASE("parse_ideal_string") {
  MonomialIdeal I = parse_ideal_string("n=3\nx1*x2, x2*x3\nx1*x3");
  CHECK(I.vars() == 3);
  CHECK(I.num_gens() == 3);

  // comments and blank lines are skipped
  MonomialIdeal J = parse_ideal_string(
      "# edge ideal\nn=2\n\nx1*x2  # the only generator\n");
  CHECK(J == parse_ideal_string("n=2\nx1*x2"));

  // generators are minimalized on load
  CHECK(parse_ideal_string("n=2\nx1, x1*x2").num_gens() == 1);

  // the unit ideal and the zero ideal
  CHECK(parse_ideal_string("n=3\n1").contains(Monomial::one(3)));
  CHECK(parse_ideal_string("n=3\n").is_zero());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_ideal_string("n=3\nx1*x2, x9");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS(parse_ideal_string("x1*x2"), ParseError);       // missing header
  CHECK_THROWS_AS(parse_ideal_string("n=zero\nx1"), ParseError);  // bad header
  CHECK_THROWS_AS(parse_ideal_string("n=-1\n"), ParseError);
}

TEST_CASE("format / parse roundtrip") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<Monomial> gens;
    int m = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < m; ++i) {
      std::vector<int> e(n, 0);
      int deg = 1 + static_cast<int>(rng() % 3);
      for (int d = 0; d < deg; ++d) e[rng() % n] += 1;
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal I(n, std::move(gens));
    CHECK(parse_ideal_string(format_ideal(I)) == I);
  }
}

TEST_CASE("load_ideal from file") {
  const std::string path = "io_test_tmp.ideal";
  {
    std::ofstream out(path);
    out << "n=4\nx1^2, x1*x2\nx2^4\n";
  }
  MonomialIdeal I = load_ideal(path);
  CHECK(I == parse_ideal_string("n=4\nx1^2, x1*x2, x2^4"));
  std::remove(path.c_str());
  CHECK_THROWS(load_ideal("no_such_file.ideal"));
}

TEST_CASE("ideal str is stable") {
  MonomialIdeal I = parse_ideal_string("n=3\nx2*x3, x1*x2");
  CHECK(I.str() == "(x2*x3, x1*x2)");  // canonical exponent-vector order
  CHECK(MonomialIdeal::zero(2).str() == "(0)");
}
