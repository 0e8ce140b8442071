#include "homshift/linquot.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace homshift {

namespace {

void check_permutation(const std::vector<int>& order, int m) {
  if (static_cast<int>(order.size()) != m) {
    throw std::invalid_argument("order is not a permutation of the generators");
  }
  std::vector<bool> seen(m, false);
  for (int v : order) {
    if (v < 0 || v >= m || seen[v]) {
      throw std::invalid_argument("order is not a permutation of the generators");
    }
    seen[v] = true;
  }
}

// Colon table: col[j][i] = u_j : u_i.
std::vector<std::vector<Monomial>> colon_table(const std::vector<Monomial>& gens) {
  int m = static_cast<int>(gens.size());
  std::vector<std::vector<Monomial>> col(m, std::vector<Monomial>(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      if (i != j) col[j][i] = colon_quotient(gens[j], gens[i]);
    }
  }
  return col;
}

// Can generator g be appended after the prefix set `mask`?
bool can_append(const std::vector<std::vector<Monomial>>& col, unsigned mask, int g) {
  int m = static_cast<int>(col.size());
  for (int j = 0; j < m; ++j) {
    if (!(mask >> j & 1u)) continue;
    bool dominated = false;
    for (int l = 0; l < m && !dominated; ++l) {
      if (!(mask >> l & 1u)) continue;
      if (col[l][g].degree() == 1 && col[l][g].divides(col[j][g])) dominated = true;
    }
    if (!dominated) return false;
  }
  return true;
}

void enumerate_subsets(const std::vector<int>& set, int k,
                       const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> pick;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(pick.size()) == k) {
      emit(pick);
      return;
    }
    for (size_t s = start; s < set.size(); ++s) {
      if (static_cast<int>(set.size() - s) < k - static_cast<int>(pick.size())) break;
      pick.push_back(set[s]);
      rec(s + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace

AdmissibleResult is_admissible(const MonomialIdeal& I, const std::vector<int>& order) {
  const auto& gens = I.gens();
  int m = static_cast<int>(gens.size());
  check_permutation(order, m);

  AdmissibleOrderCertificate cert;
  cert.order = order;
  cert.sets.resize(m);
  for (int i = 0; i < m; ++i) {
    std::vector<Monomial> colons(i);
    for (int j = 0; j < i; ++j) {
      colons[j] = colon_quotient(gens[order[j]], gens[order[i]]);
    }
    for (int j = 0; j < i; ++j) {
      bool dominated = false;
      for (int l = 0; l < i && !dominated; ++l) {
        if (colons[l].degree() == 1 && colons[l].divides(colons[j])) dominated = true;
      }
      if (!dominated) return FailureWitness{i, j};
    }
    std::vector<int> s;
    for (int l = 0; l < i; ++l) {
      if (colons[l].degree() == 1) {
        int p = colons[l].support().front();
        s.push_back(p);
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    cert.sets[i] = std::move(s);
  }
  return cert;
}

std::optional<AdmissibleOrderCertificate> find_admissible_order(
    const MonomialIdeal& I, const LinQuotOptions& opts) {
  const auto& gens = I.gens();
  int m = static_cast<int>(gens.size());
  if (m > opts.generator_cap) {
    throw ResourceCapError("find_admissible_order: " + std::to_string(m) +
                           " generators exceed the cap of " +
                           std::to_string(opts.generator_cap));
  }
  if (m == 0) return AdmissibleOrderCertificate{};

  auto col = colon_table(gens);
  std::vector<int> deg(m);
  for (int g = 0; g < m; ++g) deg[g] = gens[g].degree();

  unsigned full = (1u << m) - 1;
  std::vector<int8_t> parent(full + 1, -1);
  std::vector<int8_t> maxdeg(full + 1, 0);
  std::vector<bool> reachable(full + 1, false);
  reachable[0] = true;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (!reachable[mask]) continue;
    if (mask == full) break;
    for (int g = 0; g < m; ++g) {
      if (mask >> g & 1u) continue;
      unsigned next = mask | (1u << g);
      if (reachable[next]) continue;
      if (opts.degree_pruning && deg[g] < maxdeg[mask]) continue;
      if (!can_append(col, mask, g)) continue;
      reachable[next] = true;
      parent[next] = static_cast<int8_t>(g);
      maxdeg[next] = static_cast<int8_t>(std::max<int>(maxdeg[mask], deg[g]));
    }
  }
  if (!reachable[full]) return std::nullopt;

  std::vector<int> order(m);
  unsigned mask = full;
  for (int i = m - 1; i >= 0; --i) {
    int g = parent[mask];
    order[i] = g;
    mask ^= 1u << g;
  }
  auto res = is_admissible(I, order);
  // The DP condition is exactly the per-position check, so this cannot fail.
  return std::get<AdmissibleOrderCertificate>(res);
}

bool has_linear_quotients(const MonomialIdeal& I, const LinQuotOptions& opts) {
  return find_admissible_order(I, opts).has_value();
}

std::vector<int> set_of(const MonomialIdeal& I, const AdmissibleOrderCertificate& cert,
                        int i) {
  int m = I.num_gens();
  if (i < 0 || i >= m) throw std::invalid_argument("set_of: position out of range");
  const Monomial& u = I.gens()[cert.order[i]];
  std::vector<Monomial> prefix;
  for (int j = 0; j < i; ++j) prefix.push_back(I.gens()[cert.order[j]]);
  MonomialIdeal P(I.vars(), std::move(prefix));
  std::vector<int> s;
  for (int p = 1; p <= I.vars(); ++p) {
    if (P.contains(u * Monomial::variable(I.vars(), p))) s.push_back(p);
  }
  return s;
}

MonomialIdeal hs_linquot(const MonomialIdeal& I, const AdmissibleOrderCertificate& cert,
                         int k) {
  if (k < 0) throw std::invalid_argument("hs_linquot: negative k");
  if (k == 0) return I;
  std::vector<Monomial> out;
  int m = I.num_gens();
  for (int i = 0; i < m; ++i) {
    const Monomial& u = I.gens()[cert.order[i]];
    enumerate_subsets(cert.sets[i], k, [&](const std::vector<int>& A) {
      Monomial w = u;
      for (int p : A) w = w * Monomial::variable(I.vars(), p);
      out.push_back(std::move(w));
    });
  }
  return MonomialIdeal(I.vars(), std::move(out));
}

VariableColonCheck colon_all_others_is_variable_generated(const MonomialIdeal& I,
                                                          int i) {
  int m = I.num_gens();
  if (i < 0 || i >= m) {
    throw std::invalid_argument("colon check: generator index out of range");
  }
  std::vector<Monomial> colons(m);
  for (int j = 0; j < m; ++j) {
    if (j != i) colons[j] = colon_quotient(I.gens()[j], I.gens()[i]);
  }
  for (int j = 0; j < m; ++j) {
    if (j == i) continue;
    bool dominated = false;
    for (int l = 0; l < m && !dominated; ++l) {
      if (l == i) continue;
      if (colons[l].degree() == 1 && colons[l].divides(colons[j])) dominated = true;
    }
    if (!dominated) return VariableColonCheck{false, j, colons[j]};
  }
  return VariableColonCheck{true, -1, Monomial::one(I.vars())};
}

std::vector<int> lex_descending_order(const MonomialIdeal& I, const VariableOrder& ord) {
  std::vector<int> idx(I.num_gens());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return lex_compare(I.gens()[a], I.gens()[b], ord) == Cmp::greater;
  });
  return idx;
}

std::optional<AdmissibleOrderCertificate> hs1_order(
    const MonomialIdeal& I, const AdmissibleOrderCertificate& cert,
    const MonomialIdeal& hs1) {
  std::map<Monomial, int> index;
  for (int i = 0; i < hs1.num_gens(); ++i) index[hs1.gens()[i]] = i;

  // Append u_i * x_j in certificate order, per the inductive construction:
  // at step i the new generators are those of u_i * set(u_i) not yet listed.
  std::vector<int> order;
  std::vector<bool> used(hs1.num_gens(), false);
  for (size_t i = 0; i < cert.order.size(); ++i) {
    const Monomial& u = I.gens()[cert.order[i]];
    for (int p : cert.sets[i]) {
      Monomial w = u * Monomial::variable(I.vars(), p);
      auto it = index.find(w);
      if (it == index.end() || used[it->second]) continue;
      used[it->second] = true;
      order.push_back(it->second);
    }
  }
  if (static_cast<int>(order.size()) != hs1.num_gens()) return std::nullopt;
  auto res = is_admissible(hs1, order);
  if (auto* c = std::get_if<AdmissibleOrderCertificate>(&res)) return *c;
  return std::nullopt;
}

std::string format_certificate(const MonomialIdeal& I,
                               const AdmissibleOrderCertificate& cert) {
  std::ostringstream os;
  os << "order:";
  for (int g : cert.order) os << " " << I.gens()[g].str();
  os << "\n";
  for (size_t i = 0; i < cert.sets.size(); ++i) {
    os << "set(" << I.gens()[cert.order[i]].str() << "): {";
    for (size_t j = 0; j < cert.sets[i].size(); ++j) {
      if (j) os << ",";
      os << cert.sets[i][j];
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace homshift
