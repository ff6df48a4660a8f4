#pragma once

#include "lefschetz/cyclo.hpp"
#include "lefschetz/mperl.hpp"

#include <string>
#include <string_view>

namespace lefschetz {

/// Parses products and quotients of factors (1 +- t^p) with integer powers,
/// e.g. "(1-t^3)^2*(1+t^3)/((1-t)^6*(1+t)^3)". Whitespace is ignored.
///
///   expr   := term (('*' | '/') term)*
///   term   := atom ('^' int)?
///   atom   := '1' | '(' expr ')' | '(' factor ')'
///   factor := '1' ('+' | '-') 't' ('^' int)?
///
/// A parenthesized polynomial that is not of the form 1 +- t^p (for example
/// "(1-2t)" or "(t-1)") raises NotRepresentable; malformed text raises
/// ParseError with the offending position.
Representation parse_representation(std::string_view text);

CycloVector parse_zeta_expression(std::string_view text);

/// Factored text of a zeta function, using preferred_representation.
std::string format_zeta(const CycloVector& zeta);

}  // namespace lefschetz
