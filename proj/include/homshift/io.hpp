#pragma once

#include <iosfwd>
#include <string>

#include "homshift/monomial.hpp"

namespace homshift {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Ideal text format: a header line `n=<int>` fixing the ambient size,
// then comma- or newline-separated monomial tokens like `x1^2*x3`
// (the `*` is optional); `1` denotes the unit generator. `#` starts a comment.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal_string(const std::string& text);
MonomialIdeal load_ideal(const std::string& path);

Monomial parse_monomial(const std::string& token, int n);

std::string format_ideal(const MonomialIdeal& I);

}  // namespace homshift
