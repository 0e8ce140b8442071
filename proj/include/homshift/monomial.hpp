#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homshift {

// A monomial in n variables, stored as its exponent vector.
// Variables are 1-based: exp(i) is the exponent of x_i.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);

  static Monomial one(int n);
  static Monomial variable(int n, int i);

  int vars() const { return static_cast<int>(exps_.size()); }
  int exp(int i) const { return exps_.at(i - 1); }
  const std::vector<int>& exps() const { return exps_; }

  int degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Exact division; throws if other does not divide *this.
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  // Arbitrary total order, used only for canonical storage.
  auto operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }

  std::string str() const;

 private:
  std::vector<int> exps_;
};

// lcm(u, v) / v, the generator of (u) : (v).
Monomial colon_quotient(const Monomial& u, const Monomial& v);

// Reads x_{perm[0]} > x_{perm[1]} > ... > x_{perm[n-1]}.
struct VariableOrder {
  std::vector<int> perm;

  static VariableOrder identity(int n);
  int vars() const { return static_cast<int>(perm.size()); }
};

enum class Cmp { less = -1, equal = 0, greater = 1 };

// Pure lexicographic comparison (not degree-refined) under ord.
Cmp lex_compare(const Monomial& u, const Monomial& v, const VariableOrder& ord);

// A monomial ideal, held by its minimal generating set G(I).
// The zero ideal has an empty generator list; the unit ideal is gens = {1}.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int n) : n_(n) {}
  MonomialIdeal(int n, std::vector<Monomial> gens);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n); }

  int vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_equigenerated() const;
  // Common generator degree; throws for the zero ideal.
  int generator_degree() const;
  bool is_squarefree() const;

  bool contains(const Monomial& u) const;
  bool contains(const MonomialIdeal& other) const;
  bool operator==(const MonomialIdeal& other) const;

  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;  // divisibility-minimal, sorted
};

MonomialIdeal minimalize(int n, std::vector<Monomial> gens);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const Monomial& u, const MonomialIdeal& a);

// Thrown when an operation would exceed a configured size cap.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homshift
