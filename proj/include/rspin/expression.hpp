#pragma once

// Surface syntax for classes:
//
//   expr := [sign] term { ("+" | "-") term }
//   term := [ integer [ "*" ] ] atom | integer
//   atom := "lambda" [ "(" frac ")" ] | "kappa1" [ "(" frac ")" ] | "mu"
//   frac := integer "/" integer
//
// Bare "lambda" and "kappa1" are lambda(r/r) and kappa1(r/r). The denominator
// of a fraction must be the context's r. A bare integer term must be 0.

#include <string>
#include <string_view>
#include <vector>

#include "rspin/abelian.hpp"
#include "rspin/classes.hpp"

namespace rspin::expression {

using classes::ClassSymbol;
using classes::FormalClass;

/// Throws ParseError (with a 0-based offset) on malformed input and
/// InvalidInput for mu when r is odd.
FormalClass parse(std::string_view text, const Int& r);

std::string format_symbol(const ClassSymbol& s, const Int& r);
/// Canonical text of a class; re-parses to the same FormalClass.
std::string format_class(const FormalClass& x, const Int& r);

/// "4(lambda + 4*mu)": a relation row over the given generators, with its
/// content pulled out when more than one generator is involved.
std::string format_relation(const std::vector<FormalClass>& generators,
                            std::span<const Int> row, const Int& r);

/// "⟨lambda, mu | 4(lambda + 4*mu)⟩"
std::string format_presentation(const classes::Presentation& p, const Int& r);

}  // namespace rspin::expression
