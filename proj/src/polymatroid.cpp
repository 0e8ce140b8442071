#include "homshift/polymatroid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "homshift/betti.hpp"
#include "homshift/constructions.hpp"
#include "homshift/graph.hpp"
#include "homshift/linquot.hpp"

namespace homshift {

namespace {

PolymatroidResult exchange_check(const MonomialIdeal& I, bool dual) {
  if (!I.is_equigenerated()) {
    return {false, "not generated in a single degree", std::nullopt};
  }
  std::set<Monomial> gens(I.gens().begin(), I.gens().end());
  int n = I.vars();
  for (const Monomial& u : I.gens()) {
    for (const Monomial& v : I.gens()) {
      if (u == v) continue;
      for (int i = 1; i <= n; ++i) {
        if (u.exp(i) <= v.exp(i)) continue;
        bool found = false;
        int found_j = -1;
        for (int j = 1; j <= n && !found; ++j) {
          if (u.exp(j) >= v.exp(j)) continue;
          Monomial candidate =
              dual ? Monomial::variable(n, i) * (v / Monomial::variable(n, j))
                   : Monomial::variable(n, j) * (u / Monomial::variable(n, i));
          if (gens.count(candidate)) {
            found = true;
            found_j = j;
          }
        }
        if (!found) {
          return {false, "", ExchangeWitness{u, v, i, false, -1}};
        }
        (void)found_j;
      }
    }
  }
  return {true, "", std::nullopt};
}

}  // namespace

PolymatroidResult is_polymatroidal(const MonomialIdeal& I) {
  return exchange_check(I, /*dual=*/false);
}

PolymatroidResult check_dual_exchange(const MonomialIdeal& I) {
  return exchange_check(I, /*dual=*/true);
}

AllLexResult is_lq_all_lex_orders(const MonomialIdeal& I, int var_cap) {
  if (!I.is_equigenerated()) {
    return {false, std::nullopt, "not generated in a single degree"};
  }
  if (I.vars() > var_cap) {
    throw ResourceCapError("is_lq_all_lex_orders: n=" + std::to_string(I.vars()) +
                           " exceeds the all-permutations cap of " +
                           std::to_string(var_cap) + "; undecided by this route");
  }
  VariableOrder ord = VariableOrder::identity(I.vars());
  do {
    auto res = is_admissible(I, lex_descending_order(I, ord));
    if (std::holds_alternative<FailureWitness>(res)) {
      return {false, ord, ""};
    }
  } while (std::next_permutation(ord.perm.begin(), ord.perm.end()));
  return {true, std::nullopt, ""};
}

Degree2Decomposition degree2_decompose(const MonomialIdeal& I) {
  if (I.is_zero() || !I.is_equigenerated() || I.generator_degree() != 2) {
    throw std::invalid_argument("degree2_decompose: ideal must be equigenerated in degree 2");
  }
  Degree2Decomposition out{MonomialIdeal(I.vars()), {}, {}};
  std::vector<Monomial> sf;
  for (const Monomial& g : I.gens()) {
    if (g.is_squarefree()) {
      sf.push_back(g);
    } else {
      out.squares.push_back(g.support().front());
    }
  }
  std::sort(out.squares.begin(), out.squares.end());
  out.squarefree_part = MonomialIdeal(I.vars(), std::move(sf));
  std::vector<bool> is_sq(I.vars() + 1, false);
  for (int l : out.squares) is_sq[l] = true;
  for (int l : out.squares) out.relabel.push_back(l);
  for (int v = 1; v <= I.vars(); ++v) {
    if (!is_sq[v]) out.relabel.push_back(v);
  }
  return out;
}

MonomialIdeal hs_degree2(const MonomialIdeal& I, int k) {
  if (k < 0) throw std::invalid_argument("hs_degree2: negative k");
  auto poly = is_polymatroidal(I);
  if (!poly.ok) {
    throw std::invalid_argument("hs_degree2: input is not polymatroidal");
  }
  if (k == 0) return I;
  if (I.is_zero()) return I;
  Degree2Decomposition dec = degree2_decompose(I);

  int n = I.vars();
  std::vector<Monomial> gens;

  const MonomialIdeal& J = dec.squarefree_part;
  if (!J.is_zero()) {
    SimpleGraph G(n);
    for (const Monomial& g : J.gens()) {
      auto s = g.support();
      G.add_edge(s[0], s[1]);
    }
    auto chordal = is_chordal(G.complement());
    if (!chordal.chordal()) {
      throw std::invalid_argument("hs_degree2: squarefree part is not cochordal");
    }
    MonomialIdeal hsJ = hs_edge_ideal(G, *chordal.peo, k);
    for (const Monomial& g : hsJ.gens()) gens.push_back(g);
  }

  std::set<Monomial> gen_set(I.gens().begin(), I.gens().end());
  for (int l : dec.squares) {
    // set(x_l^2) = { p != l : x_p x_l in G(I) }
    std::vector<int> set_l;
    for (int p = 1; p <= n; ++p) {
      if (p == l) continue;
      if (gen_set.count(Monomial::variable(n, p) * Monomial::variable(n, l))) {
        set_l.push_back(p);
      }
    }
    Monomial sq = Monomial::variable(n, l) * Monomial::variable(n, l);
    for (const Monomial& w : veronese_order(n, set_l, k)) {
      gens.push_back(sq * w);
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

bool matroidal_any_order_peo(const MonomialIdeal& I, int var_cap) {
  auto poly = is_polymatroidal(I);
  if (!poly.ok || !I.is_squarefree() ||
      (!I.is_zero() && I.generator_degree() != 2)) {
    throw std::invalid_argument(
        "matroidal_any_order_peo: input is not a degree-2 matroidal ideal");
  }
  if (I.vars() > var_cap) {
    throw ResourceCapError("matroidal_any_order_peo: n=" + std::to_string(I.vars()) +
                           " exceeds the all-permutations cap of " +
                           std::to_string(var_cap) + "; undecided by this route");
  }
  SimpleGraph G(I.vars());
  for (const Monomial& g : I.gens()) {
    auto s = g.support();
    G.add_edge(s[0], s[1]);
  }
  SimpleGraph gc = G.complement();
  std::vector<int> perm(I.vars());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (std::holds_alternative<PeoFailure>(is_peo(gc, perm))) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

namespace {

std::vector<Monomial> all_monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> exps(n, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n) {
      if (left == 0) out.push_back(Monomial(exps));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[var] = e;
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(0, d);
  return out;
}

// Iterate the exchange completion to a fixed point.
MonomialIdeal exchange_closure(int n, std::set<Monomial> gens) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Monomial> snapshot(gens.begin(), gens.end());
    for (const Monomial& u : snapshot) {
      for (const Monomial& v : snapshot) {
        if (u == v) continue;
        for (int i = 1; i <= n; ++i) {
          if (u.exp(i) <= v.exp(i)) continue;
          bool found = false;
          int first_j = -1;
          for (int j = 1; j <= n && !found; ++j) {
            if (u.exp(j) >= v.exp(j)) continue;
            if (first_j < 0) first_j = j;
            if (gens.count(Monomial::variable(n, j) * (u / Monomial::variable(n, i)))) {
              found = true;
            }
          }
          if (!found && first_j > 0) {
            gens.insert(Monomial::variable(n, first_j) *
                        (u / Monomial::variable(n, i)));
            changed = true;
          }
        }
      }
    }
  }
  return MonomialIdeal(n, std::vector<Monomial>(gens.begin(), gens.end()));
}

}  // namespace

SampledIdeal sample_polymatroidal(int n, int degree, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pool = all_monomials_of_degree(n, degree);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<Monomial> start;
    size_t count = 2 + rng() % 3;
    while (start.size() < count) {
      start.insert(pool[rng() % pool.size()]);
    }
    MonomialIdeal I = exchange_closure(n, std::move(start));
    if (is_polymatroidal(I).ok) {
      return {std::move(I), "closure"};
    }
  }
  throw std::runtime_error("sample_polymatroidal: exhausted 1000 attempts");
}

SampledIdeal sample_degree2_polymatroidal(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (rng() % 5) {
    case 0: {
      std::vector<int> vars(n);
      std::iota(vars.begin(), vars.end(), 1);
      return {MonomialIdeal(n, veronese_order(n, vars, 2)), "veronese"};
    }
    case 1:
      return {MonomialIdeal(n, all_monomials_of_degree(n, 2)), "full-veronese"};
    case 2: {
      // (x_A)(x_B) for a random split; B may overlap A's complement only.
      std::vector<int> A, B;
      for (int v = 1; v <= n; ++v) (rng() % 2 ? A : B).push_back(v);
      if (A.empty()) A.push_back(B.back()), B.pop_back();
      if (B.empty()) B.push_back(A.back()), A.pop_back();
      std::vector<Monomial> gens;
      for (int a : A) {
        for (int b : B) {
          gens.push_back(Monomial::variable(n, a) * Monomial::variable(n, b));
        }
      }
      return {MonomialIdeal(n, std::move(gens)), "transversal"};
    }
    case 3: {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        SimpleGraph G = random_graph(n, 0.5, rng());
        MonomialIdeal I = edge_ideal(G);
        if (!I.is_zero() && is_polymatroidal(I).ok) return {std::move(I), "graph"};
      }
      throw std::runtime_error("sample_degree2_polymatroidal: exhausted 1000 attempts");
    }
    default:
      return sample_polymatroidal(n, 2, rng());
  }
}

}  // namespace homshift
