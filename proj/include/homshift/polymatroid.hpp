#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homshift/monomial.hpp"

namespace homshift {

struct ExchangeWitness {
  Monomial u, v;
  int var_i = -1;       // deg_{x_i}(u) > deg_{x_i}(v)
  bool satisfied = false;
  int var_j = -1;       // the exchange variable when satisfied
};

struct PolymatroidResult {
  bool ok;
  std::string reason;   // set when rejected without a witness (e.g. mixed degrees)
  std::optional<ExchangeWitness> witness;
};

// The exchange property over all ordered generator pairs. Non-equigenerated
// ideals are rejected outright.
PolymatroidResult is_polymatroidal(const MonomialIdeal& I);

// The dual (symmetric) exchange conclusion: x_i (v / x_j) in G(I).
PolymatroidResult check_dual_exchange(const MonomialIdeal& I);

struct AllLexResult {
  bool ok;
  std::optional<VariableOrder> failing;
  std::string reason;
};

// Linear quotients with respect to the lex order induced by every ordering
// of the variables (factorial loop, capped).
AllLexResult is_lq_all_lex_orders(const MonomialIdeal& I, int var_cap = 7);

struct Degree2Decomposition {
  MonomialIdeal squarefree_part;
  std::vector<int> squares;   // l with x_l^2 in G(I), ascending
  std::vector<int> relabel;   // permutation of 1..n putting squares first
};

Degree2Decomposition degree2_decompose(const MonomialIdeal& I);

// HS_k of a degree-2 polymatroidal ideal via the squarefree/squares
// decomposition (graph route for the squarefree part).
MonomialIdeal hs_degree2(const MonomialIdeal& I, int k);

// For a matroidal degree-2 ideal I = I(G): every vertex ordering is a
// perfect elimination order of G^c. Refuses non-matroidal input.
bool matroidal_any_order_peo(const MonomialIdeal& I, int var_cap = 7);

// Seeded generator of degree-2 polymatroidal ideals drawn from known
// families; the result always passes is_polymatroidal.
struct SampledIdeal {
  MonomialIdeal ideal;
  std::string family;
};
SampledIdeal sample_degree2_polymatroidal(int n, uint64_t seed);

// Degree-d analogue used by the open-conjecture fuzzer: exchange closure of
// a random seed set, verified before return.
SampledIdeal sample_polymatroidal(int n, int degree, uint64_t seed);

}  // namespace homshift
