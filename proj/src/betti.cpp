#include "homshift/betti.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace homshift {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Rank by fraction-free (Bareiss) elimination; exact over the integers, which
// gives the rank over any characteristic-zero field.
int matrix_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  BigInt prev = 1;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

// Boundary matrix from faces of dimension d to faces of dimension d-1.
int boundary_rank(const std::vector<std::vector<int>>& lower,
                  const std::vector<std::vector<int>>& upper) {
  if (lower.empty() || upper.empty()) return 0;
  std::map<std::vector<int>, size_t> row_of;
  for (size_t r = 0; r < lower.size(); ++r) row_of[lower[r]] = r;
  std::vector<std::vector<BigInt>> m(lower.size(),
                                     std::vector<BigInt>(upper.size(), 0));
  for (size_t c = 0; c < upper.size(); ++c) {
    const auto& f = upper[c];
    for (size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      sub.reserve(f.size() - 1);
      for (size_t t = 0; t < f.size(); ++t) {
        if (t != drop) sub.push_back(f[t]);
      }
      auto it = row_of.find(sub);
      if (it == row_of.end()) continue;  // not subset-closed; treated as zero
      m[it->second][c] = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return matrix_rank(std::move(m));
}

std::vector<Monomial> lcm_closure(const MonomialIdeal& I, size_t cap) {
  std::set<Monomial> closure(I.gens().begin(), I.gens().end());
  std::vector<Monomial> frontier(I.gens());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& a : frontier) {
      for (const Monomial& g : I.gens()) {
        Monomial l = a.lcm(g);
        if (closure.insert(l).second) {
          next.push_back(std::move(l));
          if (closure.size() > cap) {
            throw ResourceCapError(
                "multigraded_betti: lcm-lattice exceeds the cap of " +
                std::to_string(cap) + " multidegrees");
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

}  // namespace

int SimplicialComplex::face_count(int dim) const {
  int c = 0;
  for (const auto& f : faces) {
    if (static_cast<int>(f.size()) == dim + 1) ++c;
  }
  return c;
}

int SimplicialComplex::max_dim() const {
  int d = -2;  // void complex
  for (const auto& f : faces) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& a) {
  if (a.vars() != I.vars()) {
    throw std::invalid_argument("upper_koszul: ambient size mismatch");
  }
  std::vector<int> supp = a.support();
  int s = static_cast<int>(supp.size());
  SimplicialComplex C;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    Monomial q = a;
    std::vector<int> face;
    for (int t = 0; t < s; ++t) {
      if (mask >> t & 1u) {
        q = q / Monomial::variable(a.vars(), supp[t]);
        face.push_back(supp[t]);
      }
    }
    if (I.contains(q)) C.faces.push_back(std::move(face));
  }
  return C;
}

std::vector<int> homology_ranks(const SimplicialComplex& C) {
  int top = C.max_dim();
  if (top == -2) return {};  // void complex
  // bydim[d + 1] holds the faces of dimension d.
  std::vector<std::vector<std::vector<int>>> bydim(top + 2);
  for (const auto& f : C.faces) bydim[f.size()].push_back(f);
  for (auto& fs : bydim) std::sort(fs.begin(), fs.end());

  // ranks[i] = rank H~_{i-1}; boundary_rank(d) maps dim d to dim d-1.
  std::vector<int> bnd(top + 3, 0);
  for (int d = 0; d <= top; ++d) {
    bnd[d + 1] = boundary_rank(bydim[d], bydim[d + 1]);
  }
  std::vector<int> ranks(top + 2, 0);
  for (int d = -1; d <= top; ++d) {
    int cells = static_cast<int>(bydim[d + 1].size());
    ranks[d + 1] = cells - bnd[d + 1] - bnd[d + 2];
  }
  return ranks;
}

void BettiTable::set(int i, const Monomial& a, int rank) {
  if (rank < 0) throw std::invalid_argument("negative Betti rank");
  if (rank == 0) return;
  entries_[{i, a}] = rank;
}

int BettiTable::multigraded(int i, const Monomial& a) const {
  auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::graded(int i, int j) const {
  int total = 0;
  for (const auto& [key, rank] : entries_) {
    if (key.first == i && key.second.degree() == j) total += rank;
  }
  return total;
}

int BettiTable::total(int i) const {
  int total = 0;
  for (const auto& [key, rank] : entries_) {
    if (key.first == i) total += rank;
  }
  return total;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [key, rank] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::min_shift_degree() const {
  int v = -1;
  for (const auto& [key, rank] : entries_) {
    int d = key.second.degree() - key.first;
    if (v < 0 || d < v) v = d;
  }
  return v;
}

int BettiTable::max_shift_degree() const {
  int v = -1;
  for (const auto& [key, rank] : entries_) {
    v = std::max(v, key.second.degree() - key.first);
  }
  return v;
}

std::string BettiTable::render(int row_min, int row_max, int col_min,
                               int col_max) const {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header(1, "");
  for (int i = col_min; i <= col_max; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  for (int r = row_min; r <= row_max; ++r) {
    std::vector<std::string> row(1, std::to_string(r));
    for (int i = col_min; i <= col_max; ++i) {
      int b = graded(i, r + i);
      row.push_back(b == 0 ? "." : std::to_string(b));
    }
    cells.push_back(row);
  }
  size_t w = 0;
  for (const auto& row : cells) {
    for (const auto& c : row) w = std::max(w, c.size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) os << " ";
      os << std::string(w - row[c].size(), ' ') << row[c];
    }
    os << "\n";
  }
  return os.str();
}

std::string BettiTable::render() const {
  if (entries_.empty()) return "(empty table)\n";
  return render(min_shift_degree(), max_shift_degree(), 0, projective_dimension());
}

std::string BettiTable::render_triples() const {
  std::ostringstream os;
  for (const auto& [key, rank] : entries_) {
    os << key.first << " (";
    const auto& e = key.second.exps();
    for (size_t t = 0; t < e.size(); ++t) {
      if (t) os << ",";
      os << e[t];
    }
    os << ") " << rank << "\n";
  }
  return os.str();
}

BettiTable multigraded_betti(const MonomialIdeal& I, const BettiOptions& opts) {
  BettiTable table(I.vars());
  for (const Monomial& a : lcm_closure(I, opts.multidegree_cap)) {
    auto ranks = homology_ranks(upper_koszul(I, a));
    for (size_t i = 0; i < ranks.size(); ++i) {
      if (ranks[i] > 0) table.set(static_cast<int>(i), a, ranks[i]);
    }
  }
  return table;
}

MonomialIdeal hs_betti(const MonomialIdeal& I, int k, const BettiTable& table) {
  if (k < 0) throw std::invalid_argument("hs_betti: negative k");
  std::vector<Monomial> gens;
  for (const auto& [key, rank] : table.entries()) {
    if (key.first == k) gens.push_back(key.second);
  }
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal hs_betti(const MonomialIdeal& I, int k, const BettiOptions& opts) {
  if (k == 0) return I;
  return hs_betti(I, k, multigraded_betti(I, opts));
}

bool has_linear_resolution(const MonomialIdeal& I, const BettiOptions& opts) {
  if (I.is_zero()) return true;
  if (!I.is_equigenerated()) return false;
  int d = I.generator_degree();
  BettiTable table = multigraded_betti(I, opts);
  for (const auto& [key, rank] : table.entries()) {
    if (key.second.degree() != key.first + d) return false;
  }
  return true;
}

BettiSplitResult is_betti_splitting(const MonomialIdeal& I, const MonomialIdeal& I1,
                                    const MonomialIdeal& I2, const BettiOptions& opts) {
  std::vector<Monomial> merged(I1.gens());
  merged.insert(merged.end(), I2.gens().begin(), I2.gens().end());
  std::sort(merged.begin(), merged.end());
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end() ||
      merged != I.gens()) {
    throw std::invalid_argument(
        "is_betti_splitting: G(I) must be the disjoint union of G(I1) and G(I2)");
  }

  BettiTable t = multigraded_betti(I, opts);
  BettiTable t1 = multigraded_betti(I1, opts);
  BettiTable t2 = multigraded_betti(I2, opts);
  BettiTable tc = multigraded_betti(intersect(I1, I2), opts);

  std::set<std::pair<int, int>> positions;
  auto collect = [&positions](const BettiTable& table, int shift) {
    for (const auto& [key, rank] : table.entries()) {
      positions.insert({key.first + shift, key.second.degree()});
    }
  };
  collect(t, 0);
  collect(t1, 0);
  collect(t2, 0);
  collect(tc, 1);

  for (const auto& [i, j] : positions) {
    if (t.graded(i, j) != t1.graded(i, j) + t2.graded(i, j) + tc.graded(i - 1, j)) {
      return BettiSplitResult{false, i, j};
    }
  }
  return BettiSplitResult{true};
}

}  // namespace homshift
