#pragma once

// Text input formats.
//
// Conic list: one conic per line as two whitespace-separated rationals
// ("-1 3", "-1/2 3"). "#" starts a comment; blank lines are ignored.
//
// Ring expression document: statements separated by newlines or ';'. A
// statement is either `name = expr` or a bare `expr`; the value of the last
// statement is the result.
//
//   expr    := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | name | 'P1' | '[L]' | '(' expr ')'
//            | '[' conic (',' conic)* ']'          class of a product of conics
//            | '[' ']'                              the empty product, 1
//            | 'C(' group ')' ('[L]' ('^' integer)?)?
//   group   := '0' | item (',' item)*               item: '{2,inf}' or '(a,b)'
//   conic   := '(' rational ',' rational ')'
//
// Canonical output of RingElement::to_string() parses back to the same element.

#include <string_view>

#include "conicring/conic.hpp"
#include "conicring/gring.hpp"

namespace conicring {

/// Throws ParseError with the offending line and column, including for
/// degenerate conics.
ConicProduct parse_conic_list(std::string_view text, const Bounds& bounds = {});

RingElement evaluate_ring_document(std::string_view text, const Bounds& bounds = {});

}  // namespace conicring
