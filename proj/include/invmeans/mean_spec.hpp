#pragma once

// Textual mean specifications.
//
//   spec    := '(' spec ')' | form
//   form    := arithmetic | geometric | harmonic | logarithmic | min | max
//            | proj1 | proj2
//            | power:P | stolarsky:R:S | proj:CONE
//            | mt:spec:T                    self-complementary base M_t
//            | nt:spec:spec:spec:T          general base N_t (M, C, D)
//            | pair:spec:spec:spec:T        general pair (M, C, D)
//            | xypair:spec:T:CONE           projective pair over M_t
//            | logpair:T:CONE               logarithmic-mean pair
//            | mapping:spec:spec:spec       hand-made pair (K, L, target M)
//            | k:spec | l:spec              a component of a pair
//
// Composite operands may be parenthesized; they never need to be, since
// every form has a fixed number of fields. Labels produced by the library
// are valid specs that re-parse to the same function.

#include <string_view>
#include <variant>

#include "invmeans/complement.hpp"
#include "invmeans/means.hpp"

namespace invmeans {

using SpecValue = std::variant<MeanFn, MeanPair>;

/// Throws ParseError (with position) on malformed text; errors raised by the
/// constructors themselves propagate unchanged.
SpecValue parse_mean_spec(std::string_view text);

/// As parse_mean_spec, requiring a single mean.
MeanFn parse_mean(std::string_view text);

/// As parse_mean_spec, requiring a pair.
MeanPair parse_pair(std::string_view text);

} // namespace invmeans
