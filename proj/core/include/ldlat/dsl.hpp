#pragma once

#include <string>
#include <string_view>

#include "ldlat/adjunct_expr.hpp"
#include "ldlat/lattice.hpp"

namespace ldlat::dsl {

/// Label of the bottom element in `.adl` sources.
inline constexpr std::string_view kBottom = "0";
/// Synthetic root label produced by graph recognition; accepted wherever an
/// identifier is.
inline constexpr std::string_view kSyntheticTop = "\xE2\x8A\xA4";  // U+22A4

/// True when `name` can be written as an element identifier:
/// [A-Za-z_][A-Za-z0-9_]* or the synthetic top token.
bool is_identifier(std::string_view name);

/// Grammar:
///   document   := "lattice" IDENT "{" chainStmt adjoinStmt* "}"
///   chainStmt  := "chain" IDENT+ ";"
///   adjoinStmt := "adjoin" "(" IDENT "," IDENT ")" ":" IDENT+ ";"
/// `#` starts a comment running to the end of the line. The token `0` may
/// only open the chain statement or a pair.
///
/// Throws DiagnosticError with SyntaxError, DuplicateElement or
/// UnknownElement.
AdjunctExpr parse(std::string_view text);

/// Canonical layout: one statement per line, two-space indent.
std::string serialize(const AdjunctExpr& expr);

/// Applies the adjunctions left to right. Throws DiagnosticError with
/// PairNotAdjunctable when a pair is not a < b with a not covered by b at
/// that moment.
Lattice elaborate(const AdjunctExpr& expr);

}  // namespace ldlat::dsl
