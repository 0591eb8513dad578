#pragma once

// Text form of elements of F_V(3).
//
//   relation := term (("+"|"-") term)*
//   term     := [rational "*"] mono
//   mono     := "(" var "{" gen "}" var ")" "{" gen "}" var
//             | var "{" gen "}" "(" var "{" gen "}" var ")"
//   var      := "x1" | "x2" | "x3"
//   rational := int ["/" posint]
//
// Whitespace is insignificant; a leading sign on the first term is accepted, and
// the literal "0" denotes the zero element.

#include <array>
#include <string>
#include <string_view>

#include "quadop/free3.hpp"

namespace quadop {

/// Throws ParseError on malformed syntax, unknown generators or repeated variables.
VectorQ parse_relation(std::string_view text, const GeneratorSpace& v);

using VariableNames = std::array<std::string, 3>;
inline const VariableNames kDefaultVariables{"x1", "x2", "x3"};

/// Canonical text in basis monomials; parse_relation(pretty_print(v)) == v.
std::string pretty_print(std::span<const Rational> vec, const GeneratorSpace& v,
                         const VariableNames& vars = kDefaultVariables);

/// Text of the basis monomial (σ, outer, inner).
std::string monomial_text(const Free3Index& idx, const GeneratorSpace& v,
                          const VariableNames& vars = kDefaultVariables);

}  // namespace quadop
