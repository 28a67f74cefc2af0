#pragma once

#include "lnd/polynomial.hpp"
#include "lnd/ring.hpp"

#include <string_view>

namespace lnd {

/// Grammar, loosest to tightest:
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' INTEGER)*
///   atom  := INTEGER ['/' INTEGER] | IDENT | '(' expr ')'
/// `a/b` is only a rational literal; there is no implicit multiplication.
/// Throws ParseError (with byte offset) or UnknownIdentifier.
Polynomial parse_expression(std::string_view text, const ContextPtr& context);

/// Parses in the ring's variables and reduces to normal form.
RingElement parse_element(std::string_view text, const Ring& ring);

}  // namespace lnd
