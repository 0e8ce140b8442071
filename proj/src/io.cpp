#include "homshift/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace homshift {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
  size_t h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

}  // namespace

Monomial parse_monomial(const std::string& token, int n) {
  std::string t = strip(token);
  if (t.empty()) throw ParseError("empty monomial token", 0, 0);
  if (t == "1") return Monomial::one(n);
  std::vector<int> exps(n, 0);
  size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] == '*') {
      ++pos;
      continue;
    }
    if (t[pos] != 'x') {
      throw ParseError("expected 'x' in monomial token '" + t + "'", 0,
                       static_cast<int>(pos) + 1);
    }
    ++pos;
    size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == start) {
      throw ParseError("missing variable index in '" + t + "'", 0,
                       static_cast<int>(pos) + 1);
    }
    int idx = std::stoi(t.substr(start, pos - start));
    if (idx < 1 || idx > n) {
      throw ParseError("variable x" + std::to_string(idx) + " out of range [1," +
                           std::to_string(n) + "]",
                       0, static_cast<int>(start) + 1);
    }
    int e = 1;
    if (pos < t.size() && t[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
      if (pos == start) {
        throw ParseError("missing exponent in '" + t + "'", 0,
                         static_cast<int>(pos) + 1);
      }
      e = std::stoi(t.substr(start, pos - start));
    }
    exps[idx - 1] += e;
  }
  return Monomial(std::move(exps));
}

MonomialIdeal parse_ideal(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(strip_comment(line));
    if (line.empty()) continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0 && line.rfind("n =", 0) != 0) {
        throw ParseError("expected header line 'n=<int>'", lineno, 1);
      }
      try {
        n = std::stoi(line.substr(line.find('=') + 1));
      } catch (const std::exception&) {
        throw ParseError("malformed header '" + line + "'", lineno, 1);
      }
      if (n < 0) throw ParseError("ambient size must be non-negative", lineno, 1);
      continue;
    }
    std::stringstream ss(line);
    std::string tok;
    int col = 1;
    while (std::getline(ss, tok, ',')) {
      std::string t = strip(tok);
      if (t.empty()) {
        col += static_cast<int>(tok.size()) + 1;
        continue;
      }
      try {
        gens.push_back(parse_monomial(t, n));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno, col);
      }
      col += static_cast<int>(tok.size()) + 1;
    }
  }
  if (n < 0) throw ParseError("missing header line 'n=<int>'", lineno, 1);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal parse_ideal_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_ideal(ss);
}

MonomialIdeal load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file: " + path);
  return parse_ideal(in);
}

std::string format_ideal(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "n=" << I.vars() << "\n";
  for (const Monomial& g : I.gens()) os << g.str() << "\n";
  return os.str();
}

}  // namespace homshift
