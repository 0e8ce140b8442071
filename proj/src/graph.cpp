#include "homshift/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace homshift {

namespace {

void check_vertex(const SimpleGraph& G, int v) {
  if (v < 1 || v > G.n()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [1," +
                                std::to_string(G.n()) + "]");
  }
}

void check_ordering(const SimpleGraph& G, const std::vector<int>& ordering) {
  if (static_cast<int>(ordering.size()) != G.n()) {
    throw std::invalid_argument("ordering does not permute the vertex set");
  }
  std::vector<bool> seen(G.n() + 1, false);
  for (int v : ordering) {
    if (v < 1 || v > G.n() || seen[v]) {
      throw std::invalid_argument("ordering does not permute the vertex set");
    }
    seen[v] = true;
  }
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(n + 1, std::vector<bool>(n + 1, false)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void SimpleGraph::add_edge(int i, int j) {
  check_vertex(*this, i);
  check_vertex(*this, j);
  if (i == j) throw std::invalid_argument("loops are not allowed");
  adj_[i][j] = adj_[j][i] = true;
}

bool SimpleGraph::has_edge(int i, int j) const {
  check_vertex(*this, i);
  check_vertex(*this, j);
  return adj_[i][j];
}

std::vector<int> SimpleGraph::neighbors(int i) const {
  check_vertex(*this, i);
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j) {
    if (adj_[i][j]) out.push_back(j);
  }
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (adj_[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

int SimpleGraph::edge_count() const { return static_cast<int>(edges().size()); }

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!adj_[i][j]) c.add_edge(i, j);
    }
  }
  return c;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  SimpleGraph h(static_cast<int>(vertices.size()));
  for (size_t a = 0; a < vertices.size(); ++a) {
    for (size_t b = a + 1; b < vertices.size(); ++b) {
      if (has_edge(vertices[a], vertices[b])) {
        h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
      }
    }
  }
  return h;
}

bool SimpleGraph::is_clique(const std::vector<int>& vertices) const {
  for (size_t a = 0; a < vertices.size(); ++a) {
    for (size_t b = a + 1; b < vertices.size(); ++b) {
      if (!has_edge(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n_ + 1, false);
  for (int s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (int w : neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool SimpleGraph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool SimpleGraph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

std::variant<Peo, PeoFailure> is_peo(const SimpleGraph& G,
                                     const std::vector<int>& ordering) {
  check_ordering(G, ordering);
  int n = G.n();
  std::vector<int> pos(n + 1, 0);
  for (int p = 0; p < n; ++p) pos[ordering[p]] = p;
  for (int p = 0; p < n; ++p) {
    int v = ordering[p];
    std::vector<int> later;
    for (int w : G.neighbors(v)) {
      if (pos[w] > p) later.push_back(w);
    }
    for (size_t a = 0; a < later.size(); ++a) {
      for (size_t b = a + 1; b < later.size(); ++b) {
        if (!G.has_edge(later[a], later[b])) {
          return PeoFailure{v, {later[a], later[b]}};
        }
      }
    }
  }
  return Peo{ordering};
}

namespace {

// Brute-force induced cycle of length >= 4: any vertex subset whose induced
// subgraph is 2-regular and connected, walked into cyclic order.
std::vector<int> find_induced_cycle(const SimpleGraph& G) {
  int n = G.n();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1u) verts.push_back(v);
    }
    if (verts.size() < 4) continue;
    bool regular = true;
    for (int v : verts) {
      int d = 0;
      for (int w : verts) {
        if (w != v && G.has_edge(v, w)) ++d;
      }
      if (d != 2) {
        regular = false;
        break;
      }
    }
    if (!regular || !G.induced(verts).is_connected()) continue;
    // walk the cycle
    std::vector<int> cycle{verts[0]};
    std::vector<bool> used(n + 1, false);
    used[verts[0]] = true;
    while (cycle.size() < verts.size()) {
      for (int w : verts) {
        if (!used[w] && G.has_edge(cycle.back(), w)) {
          cycle.push_back(w);
          used[w] = true;
          break;
        }
      }
    }
    return cycle;
  }
  return {};
}

}  // namespace

ChordalResult is_chordal(const SimpleGraph& G) {
  int n = G.n();
  // Maximum cardinality search; visiting order reversed is a PEO iff chordal.
  std::vector<int> weight(n + 1, 0);
  std::vector<bool> visited(n + 1, false);
  std::vector<int> visit_order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v) {
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    visited[best] = true;
    visit_order.push_back(best);
    for (int w : G.neighbors(best)) {
      if (!visited[w]) ++weight[w];
    }
  }
  std::reverse(visit_order.begin(), visit_order.end());
  auto res = is_peo(G, visit_order);
  if (std::holds_alternative<Peo>(res)) {
    return ChordalResult{visit_order, {}};
  }
  return ChordalResult{std::nullopt, find_induced_cycle(G)};
}

namespace {

// Both PEO conditions are checkable at placement time: the forward condition
// for v needs its unplaced neighbors to be a clique, the reverse condition
// needs its placed neighbors to be a clique.
bool reversible_peo_search(const SimpleGraph& G, std::vector<int>& prefix,
                           std::vector<bool>& placed) {
  int n = G.n();
  if (static_cast<int>(prefix.size()) == n) return true;
  for (int v = 1; v <= n; ++v) {
    if (placed[v]) continue;
    std::vector<int> before, after;
    for (int w : G.neighbors(v)) {
      (placed[w] ? before : after).push_back(w);
    }
    if (!G.is_clique(before) || !G.is_clique(after)) continue;
    prefix.push_back(v);
    placed[v] = true;
    if (reversible_peo_search(G, prefix, placed)) return true;
    prefix.pop_back();
    placed[v] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_reversible_peo(const SimpleGraph& G,
                                                    const OrderSearchOptions& opts) {
  if (G.n() > opts.vertex_cap) {
    throw ResourceCapError("find_reversible_peo: " + std::to_string(G.n()) +
                           " vertices exceed the cap of " +
                           std::to_string(opts.vertex_cap));
  }
  std::vector<int> prefix;
  std::vector<bool> placed(G.n() + 1, false);
  if (!reversible_peo_search(G, prefix, placed)) return std::nullopt;
  return prefix;
}

namespace {

bool proper_interval_search(const SimpleGraph& G, std::vector<int>& order,
                            std::vector<bool>& placed) {
  int n = G.n();
  if (static_cast<int>(order.size()) == n) return true;
  int j = static_cast<int>(order.size());  // next 0-based position
  for (int v = 1; v <= n; ++v) {
    if (placed[v]) continue;
    // Smallest placed neighbor forces the whole window {m..j} to be a clique.
    int m = -1;
    for (int p = 0; p < j; ++p) {
      if (G.has_edge(order[p], v)) {
        m = p;
        break;
      }
    }
    bool ok = true;
    if (m >= 0) {
      for (int p = m; p < j && ok; ++p) {
        if (!G.has_edge(order[p], v)) ok = false;
        for (int q = p + 1; q < j && ok; ++q) {
          if (!G.has_edge(order[p], order[q])) ok = false;
        }
      }
    }
    if (!ok) continue;
    order.push_back(v);
    placed[v] = true;
    if (proper_interval_search(G, order, placed)) return true;
    order.pop_back();
    placed[v] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> proper_interval_order(const SimpleGraph& G,
                                                      const OrderSearchOptions& opts) {
  if (G.n() > opts.vertex_cap) {
    throw ResourceCapError("proper_interval_order: " + std::to_string(G.n()) +
                           " vertices exceed the cap of " +
                           std::to_string(opts.vertex_cap));
  }
  std::vector<int> order;
  std::vector<bool> placed(G.n() + 1, false);
  if (!proper_interval_search(G, order, placed)) return std::nullopt;
  return order;
}

MonomialIdeal edge_ideal(const SimpleGraph& G) {
  std::vector<Monomial> gens;
  for (auto [i, j] : G.edges()) {
    gens.push_back(Monomial::variable(G.n(), i) * Monomial::variable(G.n(), j));
  }
  return MonomialIdeal(G.n(), std::move(gens));
}

namespace {

std::vector<int> positions_of(const std::vector<int>& ordering, int n) {
  std::vector<int> pos(n + 1, 0);
  for (int p = 0; p < n; ++p) pos[ordering[p]] = p + 1;  // 1-based labels
  return pos;
}

void require_peo_of_complement(const SimpleGraph& G, const std::vector<int>& peo) {
  auto res = is_peo(G.complement(), peo);
  if (std::holds_alternative<PeoFailure>(res)) {
    throw std::invalid_argument("ordering is not a perfect elimination order of G^c");
  }
}

}  // namespace

std::vector<int> set_edge(const SimpleGraph& G, const std::vector<int>& peo_of_complement,
                          int i, int j) {
  if (!G.has_edge(i, j)) {
    throw std::invalid_argument("set_edge: {" + std::to_string(i) + "," +
                                std::to_string(j) + "} is not an edge");
  }
  require_peo_of_complement(G, peo_of_complement);
  auto pos = positions_of(peo_of_complement, G.n());
  int pi = pos[i], pj = pos[j];
  if (pi > pj) {
    std::swap(pi, pj);
    std::swap(i, j);
  }
  std::vector<int> out;
  for (int t = 1; t < pi; ++t) out.push_back(peo_of_complement[t - 1]);
  for (int t = pi + 1; t < pj; ++t) {
    int w = peo_of_complement[t - 1];
    if (G.has_edge(i, w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal hs_edge_ideal(const SimpleGraph& G,
                            const std::vector<int>& peo_of_complement, int k) {
  if (k < 0) throw std::invalid_argument("hs_edge_ideal: negative k");
  require_peo_of_complement(G, peo_of_complement);
  int n = G.n();
  auto pos = positions_of(peo_of_complement, n);
  // Relabel so the PEO reads 1 > 2 > ... > n.
  SimpleGraph H(n);
  for (auto [i, j] : G.edges()) H.add_edge(pos[i], pos[j]);

  // A squarefree support T of size k+2 generates iff for some split point r
  // the vertex T[r] is adjacent to everything after it.
  std::vector<Monomial> gens;
  std::vector<int> T;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(T.size()) == k + 2) {
      for (size_t r = 0; r + 1 < T.size(); ++r) {
        bool all = true;
        for (size_t b = r + 1; b < T.size() && all; ++b) {
          if (!H.has_edge(T[r], T[b])) all = false;
        }
        if (all) {
          Monomial w = Monomial::one(n);
          for (int t : T) w = w * Monomial::variable(n, peo_of_complement[t - 1]);
          gens.push_back(std::move(w));
          break;
        }
      }
      return;
    }
    for (int t = start; t <= n; ++t) {
      T.push_back(t);
      rec(t + 1);
      T.pop_back();
    }
  };
  rec(1);
  return MonomialIdeal(n, std::move(gens));
}

SimpleGraph add_whisker(const SimpleGraph& G, int i) {
  check_vertex(G, i);
  SimpleGraph h(G.n() + 1);
  for (auto [a, b] : G.edges()) h.add_edge(a, b);
  h.add_edge(i, G.n() + 1);
  return h;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph h(a.n() + b.n());
  for (auto [i, j] : a.edges()) h.add_edge(i, j);
  for (auto [i, j] : b.edges()) h.add_edge(i + a.n(), j + a.n());
  return h;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(n, 1);
  return g;
}

SimpleGraph complete_bipartite(int n, int m) {
  SimpleGraph g(n + m);
  for (int i = 1; i <= n; ++i) {
    for (int j = n + 1; j <= n + m; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph complete_multipartite(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  SimpleGraph g(n);
  std::vector<int> part_of;
  for (size_t p = 0; p < parts.size(); ++p) {
    for (int t = 0; t < parts[p]; ++t) part_of.push_back(static_cast<int>(p));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (part_of[i - 1] != part_of[j - 1]) g.add_edge(i, j);
    }
  }
  return g;
}

SimpleGraph random_tree(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  SimpleGraph g(n);
  for (int v = 2; v <= n; ++v) {
    int parent = static_cast<int>(rng() % static_cast<uint64_t>(v - 1)) + 1;
    g.add_edge(parent, v);
  }
  return g;
}

SimpleGraph random_forest(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  SimpleGraph tree = random_tree(n, rng());
  SimpleGraph g(n);
  for (auto [i, j] : tree.edges()) {
    if (rng() % 10 < 7) g.add_edge(i, j);  // keep each tree edge with prob 0.7
  }
  return g;
}

SimpleGraph random_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  SimpleGraph g(n);
  // Fixed-point threshold keeps the stream identical across platforms.
  auto threshold = static_cast<uint64_t>(p * 9007199254740992.0);  // p * 2^53
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((rng() >> 11) < threshold) g.add_edge(i, j);
    }
  }
  return g;
}

SimpleGraph parse_graph(std::istream& in) {
  std::string line;
  int n = -1;
  SimpleGraph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ss(line);
    if (n < 0) {
      std::string tag;
      if (!(ss >> tag)) continue;
      if (tag != "n") {
        throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                    ": expected header 'n <int>'");
      }
      if (!(ss >> n) || n < 0) {
        throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                    ": malformed vertex count");
      }
      g = SimpleGraph(n);
      continue;
    }
    int i, j;
    if (!(ss >> i)) continue;
    if (!(ss >> j)) {
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": expected 'i j'");
    }
    g.add_edge(i, j);
  }
  if (n < 0) throw std::invalid_argument("graph file: missing header 'n <int>'");
  return g;
}

SimpleGraph parse_graph_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_graph(ss);
}

SimpleGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string format_graph(const SimpleGraph& G) {
  std::ostringstream os;
  os << "n " << G.n() << "\n";
  for (auto [i, j] : G.edges()) os << i << " " << j << "\n";
  return os.str();
}

}  // namespace homshift
