#pragma once

#include "k3m/lattice.hpp"

#include <string>

namespace k3m {

// Builds a lattice from a textual expression. Grammar:
//
//   expr  := term ('+' term)*
//   term  := atom ('(' int ')')*          each suffix rescales the pairing
//   atom  := 'U' | 'A' n | 'D' n | 'E' n | 'T(p,q,r)' | 'diag(k)' | '<k>' | 'L_K3'
//
// Underscores after a family letter are allowed (A_5), whitespace is ignored,
// and 'U(m)' is the scaled hyperbolic plane. The returned label is the
// canonical form of the expression. Malformed input raises std::domain_error
// with the offending position.
Lattice parse_lattice(const std::string& expr);

}  // namespace k3m
