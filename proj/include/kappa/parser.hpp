#pragma once

#include <string>

#include "kappa/element.hpp"

namespace kappa {

/// Parses the canonical expression syntax into an Element.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ['-'] atom ['^' exponent]
///   atom   := integer | 'i' | 'hbar' | 'kappa' | 'x0'..'x3' | 'P0'..'P3'
///           | 'E' | '(' expr ')'
///   exponent := ['-'] integer | '(' rational ')'
///
/// 'E' denotes e^{-P_0/(kappa hbar)}; 'E^(r)' with rational r denotes
/// e^{-r P_0/(kappa hbar)}.  Generator powers must be non-negative integers;
/// division is defined for scalar divisors only.  Products are kept in the
/// written order: no commutation rule is applied at parse time.
Element parse(const std::string& text);

} // namespace kappa
