#include "homshift/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace homshift {

namespace {

void check_same_ambient(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars()) {
    throw std::invalid_argument("monomials live in different ambient rings: n=" +
                                std::to_string(u.vars()) + " vs n=" +
                                std::to_string(v.vars()));
  }
}

void check_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument("ideals live in different ambient rings: n=" +
                                std::to_string(a.vars()) + " vs n=" +
                                std::to_string(b.vars()));
  }
}

int checked_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  if (s > std::numeric_limits<int>::max()) {
    throw std::overflow_error("exponent overflow");
  }
  return static_cast<int>(s);
}

}  // namespace

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(n, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < vars(); ++i) {
    if (exps_[i] > 0) s.push_back(i + 1);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  check_same_ambient(*this, other);
  for (int i = 0; i < vars(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_ambient(*this, other);
  std::vector<int> e(exps_);
  for (int i = 0; i < vars(); ++i) e[i] = std::max(e[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_ambient(*this, other);
  std::vector<int> e(exps_);
  for (int i = 0; i < vars(); ++i) e[i] = checked_add(e[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  check_same_ambient(*this, other);
  std::vector<int> e(exps_);
  for (int i = 0; i < vars(); ++i) {
    e[i] -= other.exps_[i];
    if (e[i] < 0) throw std::invalid_argument("inexact monomial division");
  }
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < vars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (exps_[i] > 1) os << "^" << exps_[i];
    first = false;
  }
  return os.str();
}

Monomial colon_quotient(const Monomial& u, const Monomial& v) {
  return u.lcm(v) / v;
}

VariableOrder VariableOrder::identity(int n) {
  VariableOrder ord;
  ord.perm.resize(n);
  std::iota(ord.perm.begin(), ord.perm.end(), 1);
  return ord;
}

Cmp lex_compare(const Monomial& u, const Monomial& v, const VariableOrder& ord) {
  if (u.vars() != v.vars() || u.vars() != ord.vars()) {
    throw std::invalid_argument("lex_compare: ambient size mismatch");
  }
  for (int p : ord.perm) {
    if (u.exp(p) != v.exp(p)) {
      return u.exp(p) > v.exp(p) ? Cmp::greater : Cmp::less;
    }
  }
  return Cmp::equal;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
  for (const Monomial& g : gens) {
    if (g.vars() != n) throw std::invalid_argument("ideal: ambient size mismatch");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    }
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::is_equigenerated() const {
  if (gens_.empty()) return true;
  int d = gens_.front().degree();
  return std::all_of(gens_.begin(), gens_.end(),
                     [d](const Monomial& g) { return g.degree() == d; });
}

int MonomialIdeal::generator_degree() const {
  if (gens_.empty()) throw std::invalid_argument("zero ideal has no generator degree");
  return gens_.front().degree();
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.vars() != n_) throw std::invalid_argument("contains: ambient size mismatch");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&u](const Monomial& g) { return g.divides(u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_same_ambient(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return n_ == other.n_ && gens_ == other.gens_;
}

std::string MonomialIdeal::str() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str();
  }
  os << ")";
  return os.str();
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a, b);
  std::vector<Monomial> g(a.gens());
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.vars(), std::move(g));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a, b);
  std::vector<Monomial> g;
  for (const Monomial& u : a.gens()) {
    for (const Monomial& v : b.gens()) {
      g.push_back(u.lcm(v));
    }
  }
  return minimalize(a.vars(), std::move(g));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a, b);
  std::vector<Monomial> g;
  for (const Monomial& u : a.gens()) {
    for (const Monomial& v : b.gens()) {
      g.push_back(u * v);
    }
  }
  return minimalize(a.vars(), std::move(g));
}

MonomialIdeal multiply(const Monomial& u, const MonomialIdeal& a) {
  std::vector<Monomial> g;
  for (const Monomial& v : a.gens()) g.push_back(u * v);
  return minimalize(a.vars(), std::move(g));
}

}  // namespace homshift
