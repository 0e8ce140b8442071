#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homshift/monomial.hpp"

namespace homshift {

// A simplicial complex on a subset of the variable indices. Faces are sorted
// vertex lists, closed under subsets; {} is the empty face. A complex with no
// faces at all is the void complex.
struct SimplicialComplex {
  std::vector<std::vector<int>> faces;

  bool is_void() const { return faces.empty(); }
  int face_count(int dim) const;  // number of faces of the given dimension
  int max_dim() const;
};

// Upper Koszul complex of I at multidegree a: faces are the squarefree
// subsets W of supp(a) with x^a / x_W in I.
SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& a);

// Reduced homology ranks over a characteristic-zero field, indexed so that
// ranks[i] = rank of H~_{i-1}. ranks[0] is the H~_{-1} slot: 1 exactly for
// the complex {emptyset}.
std::vector<int> homology_ranks(const SimplicialComplex& C);

// Multigraded Betti table: (homological index i, multidegree a) -> rank.
class BettiTable {
 public:
  explicit BettiTable(int n) : n_(n) {}

  int vars() const { return n_; }
  void set(int i, const Monomial& a, int rank);
  int multigraded(int i, const Monomial& a) const;
  int graded(int i, int j) const;  // beta_{i,j} = sum over |a| = j
  int total(int i) const;
  int projective_dimension() const;
  int max_shift_degree() const;
  int min_shift_degree() const;

  const std::map<std::pair<int, Monomial>, int>& entries() const { return entries_; }

  // Macaulay2-style rendering: rows labeled j - i, columns by i, '.' for zero.
  std::string render(int row_min, int row_max, int col_min, int col_max) const;
  std::string render() const;
  // One `(i, a, rank)` triple per line.
  std::string render_triples() const;

 private:
  int n_;
  std::map<std::pair<int, Monomial>, int> entries_;
};

struct BettiOptions {
  // Cap on the number of candidate multidegrees (lcm-closure size).
  size_t multidegree_cap = size_t{1} << 18;
};

BettiTable multigraded_betti(const MonomialIdeal& I, const BettiOptions& opts = {});

// HS_k by definition: minimalize of { x^a : beta_{k,a}(I) > 0 }.
MonomialIdeal hs_betti(const MonomialIdeal& I, int k, const BettiOptions& opts = {});
MonomialIdeal hs_betti(const MonomialIdeal& I, int k, const BettiTable& table);

bool has_linear_resolution(const MonomialIdeal& I, const BettiOptions& opts = {});

struct BettiSplitResult {
  bool ok;
  int i = -1, j = -1;  // first failing graded position when !ok
};

// Checks beta_{i,j}(I) = beta_{i,j}(I1) + beta_{i,j}(I2) + beta_{i-1,j}(I1 cap I2)
// for all graded positions with a nonzero term. Requires G(I) to be the
// disjoint union of G(I1) and G(I2).
BettiSplitResult is_betti_splitting(const MonomialIdeal& I, const MonomialIdeal& I1,
                                    const MonomialIdeal& I2,
                                    const BettiOptions& opts = {});

}  // namespace homshift
