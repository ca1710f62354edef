#pragma once

// Text syntax for polynomials and ideals.
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := (integer | var | "(" expr ")") ("^" nat)?
//
// Variables are identifiers resolved against a declared list.

#include <string>
#include <string_view>
#include <vector>

#include "cohring/poly.hpp"

namespace cohring {

/// Throws SyntaxError (with a 0-based position) or UnknownVariable.
MultiPoly parse_poly(std::string_view text, const Ring& ring, const std::vector<std::string>& vars);

/// "(p1, p2, ...)"; the parentheses are optional.
std::vector<MultiPoly> parse_ideal(std::string_view text, const Ring& ring, const std::vector<std::string>& vars);

/// "X,Y" -> {"X", "Y"}. Throws SyntaxError on empty or malformed names and
/// ConfigError on duplicates.
std::vector<std::string> parse_var_list(std::string_view text);

/// Every identifier appearing in the texts, ordered X, Y, X1, X2, ..., then
/// any other names alphabetically.
std::vector<std::string> infer_vars(const std::vector<std::string>& texts);

}  // namespace cohring
