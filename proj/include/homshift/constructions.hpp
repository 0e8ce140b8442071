#pragma once

#include <vector>

#include "homshift/graph.hpp"
#include "homshift/linquot.hpp"
#include "homshift/monomial.hpp"

namespace homshift {

// Squarefree monomials of the given degree in `vars`, listed descending in
// the lex order induced by x_1 > ... > x_n (an admissible order of the
// squarefree Veronese ideal on those variables).
std::vector<Monomial> veronese_order(int n, const std::vector<int>& vars, int degree);

// Candidate admissible order for HS_k(I(Gamma^c)), where every connected
// component of the chordal graph Gamma is a tree or a clique. The order is
// assembled from the whisker and disjoint-union decompositions; callers
// verify it with is_admissible.
std::vector<Monomial> homological_lq_order(const SimpleGraph& gamma, int k);

// Runs homological_lq_order and checks the result: the listed generators
// must coincide with G(expected_hs) and the order must pass is_admissible.
std::optional<AdmissibleOrderCertificate> verified_hlq_certificate(
    const SimpleGraph& gamma, int k, const MonomialIdeal& expected_hs);

}  // namespace homshift
