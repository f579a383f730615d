#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wdcalc/wdrep.hpp"

namespace wdcalc {

// Parse failure with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    std::size_t offset;

    ParseError(const std::string& what, std::size_t at)
        : std::runtime_error(what + " at offset " + std::to_string(at)), offset(at) {}
};

// Parses a representation expression:
//   rep  := term ("+" term)*
//   term := [int "*"] atom ("*" atom)*
//   atom := "1" | "chi(" int ")" | "t(" rational ")" | "sp(" int ")"
//         | "op(" ident ")"
// A term carries at most one character atom (1, chi, or op; chi combined
// with op twists the opaque label), one t, and one sp. chi arguments are
// nonzero integers, reduced to their square class; sp arguments are >= 1;
// the leading multiplicity is >= 1. Whitespace is allowed between tokens.
WDRep parse_rep(const PAdicField& F, std::string_view text);

// Canonical form: constituents in their stored order, each printed as
// [mult "*"] char-atom ["*t(x)"] ["*sp(n)"], with chi omitted when trivial,
// t omitted at exponent 0, sp omitted at n = 1, and a bare "1" kept when
// nothing else survives. parse_rep inverts it exactly.
std::string print_rep(const WDRep& A);
std::string print_irred(const WDIrred& c);

}  // namespace wdcalc
