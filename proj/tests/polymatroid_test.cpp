#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homshift/betti.hpp"
#include "homshift/graph.hpp"
#include "homshift/io.hpp"
#include "homshift/linquot.hpp"
#include "homshift/polymatroid.hpp"

using namespace homshift;

namespace {

MonomialIdeal ideal(const std::string& text) { return parse_ideal_string(text); }

}  // namespace

TEST_CASE("is_polymatroidal") {
  CHECK(is_polymatroidal(ideal("n=2\nx1^2, x1*x2, x2^2")).ok);
  CHECK(is_polymatroidal(ideal("n=3\nx1*x2, x1*x3, x2*x3")).ok);
  CHECK(is_polymatroidal(ideal("n=3\nx1^2*x3")).ok);  // single generator

  PolymatroidResult r = is_polymatroidal(ideal("n=2\nx1^2, x2^2"));
  CHECK(!r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(!r.witness->satisfied);
  // the witness pair really violates exchange: u has more of x_i than v,
  // but no x_j with x_i u / x_j (sic: x_j u / x_i) in G(I)
  CHECK(r.witness->u.exp(r.witness->var_i) > r.witness->v.exp(r.witness->var_i));

  PolymatroidResult mixed = is_polymatroidal(ideal("n=2\nx1, x2^2"));
  CHECK(!mixed.ok);
  CHECK(!mixed.reason.empty());
  CHECK(!mixed.witness.has_value());
}

TEST_CASE("check_dual_exchange") {
  CHECK(check_dual_exchange(ideal("n=2\nx1^2, x1*x2, x2^2")).ok);
  CHECK(check_dual_exchange(ideal("n=3\nx1*x2, x1*x3, x2*x3")).ok);
  CHECK(!check_dual_exchange(ideal("n=2\nx1^2, x2^2")).ok);
  // squarefree Veronese: both exchange properties hold
  CHECK(check_dual_exchange(ideal("n=4\nx1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4")).ok);
}

TEST_CASE("is_lq_all_lex_orders") {
  CHECK(is_lq_all_lex_orders(ideal("n=3\nx1*x2, x1*x3, x2*x3")).ok);
  CHECK(is_lq_all_lex_orders(ideal("n=2\nx1^2, x1*x2, x2^2")).ok);

  AllLexResult bad = is_lq_all_lex_orders(ideal("n=2\nx1^2, x2^2"));
  CHECK(!bad.ok);
  REQUIRE(bad.failing.has_value());
  // the reported order really fails
  MonomialIdeal I = ideal("n=2\nx1^2, x2^2");
  std::vector<int> order = lex_descending_order(I, *bad.failing);
  CHECK(std::holds_alternative<FailureWitness>(is_admissible(I, order)));

  // non-equigenerated input is rejected with a reason, not a verdict
  AllLexResult mixed = is_lq_all_lex_orders(
      ideal("n=4\nx1^2, x1*x2, x2^4, x1*x3^4, x1*x3^3*x4, x1*x3^2*x4^2"));
  CHECK(!mixed.ok);
  CHECK(!mixed.reason.empty());
  CHECK(!mixed.failing.has_value());

  // variable cap
  std::vector<Monomial> gens;
  for (int i = 1; i <= 8; ++i) gens.push_back(Monomial::variable(8, i));
  CHECK_THROWS_AS(is_lq_all_lex_orders(MonomialIdeal(8, gens)), ResourceCapError);
}

TEST_CASE("polymatroidal iff LQ in every lex order, degree 2 exhaustive") {
  // all graphs on 4 vertices, as edge ideals
  for (int mask = 1; mask < (1 << 6); ++mask) {
    SimpleGraph G(4);
    int bit = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j, ++bit)
        if (mask & (1 << bit)) G.add_edge(i, j);
    MonomialIdeal I = edge_ideal(G);
    CHECK(is_polymatroidal(I).ok == is_lq_all_lex_orders(I).ok);
  }
}

TEST_CASE("degree2_decompose") {
  MonomialIdeal I = ideal("n=3\nx1^2, x1*x2, x2*x3");
  Degree2Decomposition d = degree2_decompose(I);
  CHECK(d.squares == std::vector<int>{1});
  CHECK(d.squarefree_part == ideal("n=3\nx1*x2, x2*x3"));
  CHECK(d.relabel.size() == 3);
  CHECK(d.relabel[0] == 1);  // squares come first

  Degree2Decomposition sf = degree2_decompose(ideal("n=3\nx1*x2"));
  CHECK(sf.squares.empty());
  CHECK_THROWS_AS(degree2_decompose(ideal("n=2\nx1^3")), std::invalid_argument);
}

TEST_CASE("hs_degree2") {
  MonomialIdeal I = ideal("n=2\nx1^2, x1*x2, x2^2");
  CHECK(hs_degree2(I, 0) == I);
  CHECK(hs_degree2(I, 1) == ideal("n=2\nx1^2*x2, x1*x2^2"));
  CHECK(hs_degree2(I, 2).is_zero());
  CHECK_THROWS_AS(hs_degree2(ideal("n=2\nx1^2, x2^2"), 1), std::invalid_argument);
}

TEST_CASE("hs_degree2 agrees with the Betti oracle") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 40; ++t) {
    SampledIdeal s = sample_degree2_polymatroidal(5, rng());
    REQUIRE(is_polymatroidal(s.ideal).ok);
    BettiTable tab = multigraded_betti(s.ideal);
    for (int k = 0; k <= tab.projective_dimension() + 1; ++k) {
      CHECK(hs_degree2(s.ideal, k) == hs_betti(s.ideal, k, tab));
    }
  }
}

TEST_CASE("matroidal_any_order_peo") {
  CHECK(matroidal_any_order_peo(ideal("n=3\nx1*x2, x1*x3, x2*x3")));
  // uniform matroid U_{2,4}
  CHECK(matroidal_any_order_peo(
      ideal("n=4\nx1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4")));
  // the 5-cycle's edge ideal is not matroidal: refused
  CHECK_THROWS_AS(
      matroidal_any_order_peo(ideal("n=5\nx1*x2, x2*x3, x3*x4, x4*x5, x1*x5")),
      std::invalid_argument);
  // non-squarefree input is refused even when polymatroidal
  CHECK_THROWS_AS(matroidal_any_order_peo(ideal("n=2\nx1^2, x1*x2, x2^2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matroidal_any_order_peo(edge_ideal(complete_graph(8))),
                  ResourceCapError);
}

TEST_CASE("samplers are deterministic and valid") {
  for (uint64_t seed : {1ull, 2ull, 99ull}) {
    SampledIdeal a = sample_degree2_polymatroidal(6, seed);
    SampledIdeal b = sample_degree2_polymatroidal(6, seed);
    CHECK(a.ideal == b.ideal);
    CHECK(a.family == b.family);
    CHECK(is_polymatroidal(a.ideal).ok);
    CHECK(a.ideal.generator_degree() == 2);

    SampledIdeal c = sample_polymatroidal(5, 3, seed);
    CHECK(sample_polymatroidal(5, 3, seed).ideal == c.ideal);
    CHECK(is_polymatroidal(c.ideal).ok);
    CHECK(c.ideal.generator_degree() == 3);
  }
}

TEST_CASE("polymatroidal ideals have LQ and all their HS are polymatroidal in degree 2") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 25; ++t) {
    SampledIdeal s = sample_degree2_polymatroidal(5, rng());
    CHECK(has_linear_quotients(s.ideal));
    BettiTable tab = multigraded_betti(s.ideal);
    for (int k = 0; k <= tab.projective_dimension(); ++k) {
      MonomialIdeal hs = hs_betti(s.ideal, k, tab);
      if (hs.is_zero()) continue;
      CHECK(is_polymatroidal(hs).ok);
    }
  }
}
