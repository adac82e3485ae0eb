#pragma once

#include <string>
#include <string_view>

#include "fcw/complex.hpp"
#include "fcw/morse.hpp"

namespace fcw {

inline constexpr std::string_view kFormatTag = "fcw/1";

/// Reads an `fcw/1` JSON document:
///
///   {"format": "fcw/1", "basepoint": "pt",
///    "cells": [{"id": "a", "dim": 1, "weight": "1/2", "boundary": {"pt": 1}}, ...]}
///
/// Weights are `-inf`, integers, fractions or finite decimals, all parsed
/// exactly. Boundary coefficients are integers reduced mod 2. Throws
/// ParseError for malformed documents and ValidationError when the complex
/// breaks an invariant.
FilteredComplex parse_complex(std::string_view text);

/// Same document reader without the validation step, for reporting
/// violations instead of throwing on the first invalid document.
FilteredComplex parse_complex_unvalidated(std::string_view text);

/// Canonical document: cells sorted by (dim, id), keys sorted, weights in
/// lowest terms, two-space indentation, trailing newline.
std::string serialize_complex(const FilteredComplex& x);

/// One critical point per line, `value<TAB>index`; blank lines and `#`
/// comments are skipped. Throws ParseError or InvalidMorseDatum.
MorseDatum parse_morse_datum(std::string_view text);

/// JSON object `{"c2": {"c1": 1}, ...}` mapping cell ids to integer boundary
/// chains (reduced mod 2).
BoundaryMap parse_boundary_map(std::string_view text);

}  // namespace fcw
