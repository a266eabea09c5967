#pragma once

#include <string_view>

#include "p4spec/graph.hpp"

namespace p4spec {

/// Evaluates a construction expression. Grammar:
///
///   expr  := name [ '(' arg { ',' arg } ')' ]
///   arg   := [ key '=' ] ( expr | integer )
///
/// Constructors:
///   spider(thin|thick, k=INT, head=expr|none)   family(P4|F0..F6)
///   caseiv(P4|F3|F4|F5|F6, head=expr)           complement(expr)
///   path(n) cycle(n) complete(n) empty(n)       union(expr, ...) join(expr, ...)
/// Atoms: Kn (complete), En (edgeless), Pn (path), Cn (cycle), F0..F6.
///
/// Errors throw ParseError carrying the 0-based offset of the offending token.
Graph parse_dsl(std::string_view text);

}  // namespace p4spec
