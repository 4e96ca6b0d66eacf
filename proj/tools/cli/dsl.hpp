#pragma once

#include <string_view>

#include "mfcalc/manifold.hpp"

namespace mfcalc::cli {

/// Parses the manifold DSL:
///   expr    := term ('#' term)*
///   term    := INT '*' primary | primary
///   primary := atom | '(' expr ')'
/// Atoms are S(n), SxS(p,q), TwS(q), CP(n), HP(n), W, M(k), X(i), Surf(g),
/// Sig0(expr) and Sig1(expr); Sig atoms are evaluated through suspend().
/// Whitespace is ignored. Throws ParseError with the byte offset of the
/// offending token, including for dimension mismatches across '#'.
ManifoldExpr parse_expr(std::string_view text);

}  // namespace mfcalc::cli
