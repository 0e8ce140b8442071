#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "homshift/monomial.hpp"

namespace homshift {

// A finite simple graph on vertices 1..n.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int n() const { return n_; }
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;
  std::vector<int> neighbors(int i) const;
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  SimpleGraph complement() const;
  // Induced subgraph; vertices are relabeled 1..k in the order given.
  SimpleGraph induced(const std::vector<int>& vertices) const;
  bool is_clique(const std::vector<int>& vertices) const;
  bool is_connected() const;
  bool is_complete() const;
  std::vector<std::vector<int>> components() const;

  bool operator==(const SimpleGraph& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<bool>> adj_;
};

// Orderings are vertex sequences: ordering[pos] = vertex, so the natural
// ordering [1,2,...,n] reads x_1 > x_2 > ... > x_n.

struct Peo {
  std::vector<int> ordering;
};

struct PeoFailure {
  int vertex;              // the vertex whose later neighborhood is not a clique
  std::pair<int, int> witness;  // a non-adjacent pair of its later neighbors
};

std::variant<Peo, PeoFailure> is_peo(const SimpleGraph& G,
                                     const std::vector<int>& ordering);

struct ChordalResult {
  std::optional<std::vector<int>> peo;
  std::vector<int> induced_cycle;  // length >= 4 when not chordal

  bool chordal() const { return peo.has_value(); }
};

// Maximum cardinality search, verified by is_peo; a brute-force induced
// cycle is produced on failure.
ChordalResult is_chordal(const SimpleGraph& G);

struct OrderSearchOptions {
  int vertex_cap = 10;
};

// An ordering that is a perfect elimination order in both directions.
std::optional<std::vector<int>> find_reversible_peo(const SimpleGraph& G,
                                                    const OrderSearchOptions& opts = {});

// A vertex labeling v_1..v_n such that every edge {v_i, v_j} with i < j makes
// the window {v_i,...,v_j} a clique (the proper-interval ordering).
std::optional<std::vector<int>> proper_interval_order(const SimpleGraph& G,
                                                      const OrderSearchOptions& opts = {});

MonomialIdeal edge_ideal(const SimpleGraph& G);

// set(x_i x_j) under the lex order induced by a PEO of the complement,
// computed by the window formula and reported in original vertex labels.
std::vector<int> set_edge(const SimpleGraph& G, const std::vector<int>& peo_of_complement,
                          int i, int j);

// HS_k of an edge ideal of a cochordal graph, by the combinatorial
// description: generators x_A x_B with max(A) < min(B), |A u B| = k + 2 and
// {max(A), b} an edge for all b in B, in the PEO-relabeled coordinates.
MonomialIdeal hs_edge_ideal(const SimpleGraph& G,
                            const std::vector<int>& peo_of_complement, int k);

SimpleGraph add_whisker(const SimpleGraph& G, int i);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_bipartite(int n, int m);
SimpleGraph complete_multipartite(const std::vector<int>& parts);
SimpleGraph random_tree(int n, uint64_t seed);
SimpleGraph random_forest(int n, uint64_t seed);
SimpleGraph random_graph(int n, double p, uint64_t seed);

// Graph file format: `n <int>` on the first line, then `i j` per edge;
// `#` starts a comment.
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph_string(const std::string& text);
SimpleGraph load_graph(const std::string& path);
std::string format_graph(const SimpleGraph& G);

}  // namespace homshift
