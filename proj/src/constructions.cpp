#include "homshift/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace homshift {

namespace {

// Descending pure lex on equal-degree squarefree monomials given by their
// sorted support lists: smaller leading support wins.
bool support_lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  return a < b;
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& vars, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(pick);
      return;
    }
    for (size_t s = start; s < vars.size(); ++s) {
      if (static_cast<int>(vars.size() - s) < k - static_cast<int>(pick.size())) break;
      pick.push_back(vars[s]);
      rec(s + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), support_lex_greater);
  return out;
}

Monomial from_support(int n, const std::vector<int>& supp) {
  std::vector<int> e(n, 0);
  for (int v : supp) e[v - 1] = 1;
  return Monomial(std::move(e));
}

// Orders of HS_k of the edge ideal of the complete bipartite graph on the
// disjoint variable sets A and B: squarefree monomials of degree k+2 whose
// support meets both sides, descending lex. This ideal is matroidal, so the
// lex order is admissible.
std::vector<Monomial> bipartite_hs_order(int n, const std::vector<int>& A,
                                         const std::vector<int>& B, int k) {
  std::vector<int> all(A);
  all.insert(all.end(), B.begin(), B.end());
  std::sort(all.begin(), all.end());
  std::set<int> in_a(A.begin(), A.end());
  std::vector<Monomial> out;
  for (const auto& supp : subsets_of_size(all, k + 2)) {
    bool meets_a = false, meets_b = false;
    for (int v : supp) (in_a.count(v) ? meets_a : meets_b) = true;
    if (meets_a && meets_b) out.push_back(from_support(n, supp));
  }
  return out;
}

// Edge ideal of the complement of `gamma` restricted to `verts`, in the
// ambient ring of n variables.
MonomialIdeal complement_edge_ideal_on(const SimpleGraph& gamma, int n,
                                       const std::vector<int>& verts) {
  std::vector<Monomial> gens;
  for (size_t a = 0; a < verts.size(); ++a) {
    for (size_t b = a + 1; b < verts.size(); ++b) {
      if (!gamma.has_edge(verts[a], verts[b])) {
        gens.push_back(Monomial::variable(n, verts[a]) *
                       Monomial::variable(n, verts[b]));
      }
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

// Admissible order of I(Gamma^c) on a chordal piece: descending lex in the
// variable order given by a PEO of Gamma (extended by the unused variables).
std::vector<Monomial> lq_order_from_peo(const SimpleGraph& gamma, int n,
                                        const std::vector<int>& verts,
                                        const MonomialIdeal& I) {
  SimpleGraph piece = gamma.induced(verts);
  auto chordal = is_chordal(piece);
  if (!chordal.chordal()) {
    throw std::invalid_argument("homological_lq_order: component is not chordal");
  }
  VariableOrder ord;
  std::vector<bool> used(n + 1, false);
  for (int p : *chordal.peo) {
    ord.perm.push_back(verts[p - 1]);
    used[verts[p - 1]] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[v]) ord.perm.push_back(v);
  }
  std::vector<Monomial> out;
  for (int idx : lex_descending_order(I, ord)) out.push_back(I.gens()[idx]);
  return out;
}

struct TreeOrders {
  const SimpleGraph& gamma;
  int n;
  // memo keyed by (sorted vertex list, k)
  std::map<std::pair<std::vector<int>, int>, std::vector<Monomial>> memo;

  std::vector<Monomial> order(const std::vector<int>& verts, int k) {
    auto key = std::make_pair(verts, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Monomial> result = compute(verts, k);
    memo[key] = result;
    return result;
  }

  std::vector<Monomial> compute(const std::vector<int>& verts, int k) {
    if (verts.size() <= 1) return {};
    MonomialIdeal I = complement_edge_ideal_on(gamma, n, verts);
    if (k == 0) return lq_order_from_peo(gamma, n, verts, I);
    if (k == 1) {
      std::vector<Monomial> base = order(verts, 0);
      if (base.empty()) return {};
      std::vector<int> idx = order_to_indices(I, base);
      auto cert = std::get<AdmissibleOrderCertificate>(is_admissible(I, idx));
      MonomialIdeal hs1 = hs_linquot(I, cert, 1);
      auto hs1cert = hs1_order(I, cert, hs1);
      if (!hs1cert) {
        throw std::logic_error("HS_1 order construction failed on a tree piece");
      }
      std::vector<Monomial> out;
      for (int g : hs1cert->order) out.push_back(hs1.gens()[g]);
      return out;
    }
    // Whisker step: drop a leaf and recombine.
    int leaf = -1, attach = -1;
    for (auto vt = verts.rbegin(); vt != verts.rend(); ++vt) {
      std::vector<int> nbrs;
      for (int w : verts) {
        if (w != *vt && gamma.has_edge(*vt, w)) nbrs.push_back(w);
      }
      if (nbrs.size() == 1) {
        leaf = *vt;
        attach = nbrs.front();
        break;
      }
    }
    if (leaf < 0) throw std::invalid_argument("homological_lq_order: component is not a tree");
    std::vector<int> rest;
    for (int w : verts) {
      if (w != leaf) rest.push_back(w);
    }
    std::vector<int> lvars;
    for (int w : rest) {
      if (w != attach) lvars.push_back(w);
    }
    std::vector<Monomial> hsL = veronese_order(n, lvars, k + 1);
    std::set<Monomial> in_hsL(hsL.begin(), hsL.end());
    Monomial xleaf = Monomial::variable(n, leaf);
    std::vector<Monomial> out;
    for (const Monomial& u : hsL) out.push_back(xleaf * u);
    for (const Monomial& v : order(rest, k - 1)) {
      if (!in_hsL.count(v)) out.push_back(xleaf * v);
    }
    for (const Monomial& w : order(rest, k)) out.push_back(w);
    return out;
  }

  static std::vector<int> order_to_indices(const MonomialIdeal& I,
                                           const std::vector<Monomial>& mons) {
    std::map<Monomial, int> index;
    for (int g = 0; g < I.num_gens(); ++g) index[I.gens()[g]] = g;
    std::vector<int> idx;
    for (const Monomial& m : mons) idx.push_back(index.at(m));
    return idx;
  }
};

bool is_tree_component(const SimpleGraph& gamma, const std::vector<int>& verts) {
  int edges = 0;
  for (size_t a = 0; a < verts.size(); ++a) {
    for (size_t b = a + 1; b < verts.size(); ++b) {
      if (gamma.has_edge(verts[a], verts[b])) ++edges;
    }
  }
  return edges == static_cast<int>(verts.size()) - 1;  // connected by construction
}

}  // namespace

std::vector<Monomial> veronese_order(int n, const std::vector<int>& vars, int degree) {
  std::vector<int> sorted(vars);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Monomial> out;
  for (const auto& supp : subsets_of_size(sorted, degree)) {
    out.push_back(from_support(n, supp));
  }
  return out;
}

std::vector<Monomial> homological_lq_order(const SimpleGraph& gamma, int k) {
  if (k < 0) throw std::invalid_argument("homological_lq_order: negative k");
  int n = gamma.n();
  TreeOrders trees{gamma, n, {}};

  std::vector<Monomial> acc;     // order for the union processed so far
  std::vector<int> acc_verts;    // its vertex set
  for (const auto& comp : gamma.components()) {
    std::vector<Monomial> comp_order;
    if (gamma.induced(comp).is_complete()) {
      // clique component: complement has no edges, nothing to contribute
    } else if (is_tree_component(gamma, comp)) {
      comp_order = trees.order(comp, k);
    } else {
      throw std::invalid_argument(
          "homological_lq_order: component is neither a tree nor a clique");
    }
    if (acc_verts.empty()) {
      acc = std::move(comp_order);
      acc_verts = comp;
      continue;
    }
    std::vector<Monomial> merged = bipartite_hs_order(n, acc_verts, comp, k);
    merged.insert(merged.end(), acc.begin(), acc.end());
    merged.insert(merged.end(), comp_order.begin(), comp_order.end());
    acc = std::move(merged);
    acc_verts.insert(acc_verts.end(), comp.begin(), comp.end());
    std::sort(acc_verts.begin(), acc_verts.end());
  }
  return acc;
}

std::optional<AdmissibleOrderCertificate> verified_hlq_certificate(
    const SimpleGraph& gamma, int k, const MonomialIdeal& expected_hs) {
  std::vector<Monomial> order = homological_lq_order(gamma, k);
  std::vector<Monomial> sorted(order);
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expected_hs.gens()) return std::nullopt;
  std::map<Monomial, int> index;
  for (int g = 0; g < expected_hs.num_gens(); ++g) index[expected_hs.gens()[g]] = g;
  std::vector<int> idx;
  for (const Monomial& m : order) idx.push_back(index.at(m));
  auto res = is_admissible(expected_hs, idx);
  if (auto* cert = std::get_if<AdmissibleOrderCertificate>(&res)) return *cert;
  return std::nullopt;
}

}  // namespace homshift
