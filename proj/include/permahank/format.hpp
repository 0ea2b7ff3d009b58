#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permahank/polynomial.hpp"

namespace permahank {

/// Syntax or name-resolution error while reading a polynomial.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Canonical text: terms in descending order, "x1*x3 + x2^2", "-2*x1 + 3/2",
/// "0" for zero. Residues print as their representative in (-p/2, p/2].
std::string format(const Polynomial& f);

/// Reads the grammar
///   poly    := ['-'] term (('+'|'-') term)* | '0'
///   term    := coeff ['*' factors] | factors
///   factors := factor ('*' factor)*
///   factor  := 'x' INT ['^' INT]
///   coeff   := INT ['/' INT]
/// Whitespace is ignored. parse(format(f)) == f.
Polynomial parse(std::string_view text, const Ring& ring,
                 MonomialOrder order = MonomialOrder::lex());

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const Ring& ring,
                                  MonomialOrder order = MonomialOrder::lex());
std::vector<std::string> format_all(const std::vector<Polynomial>& polys);

}  // namespace permahank
