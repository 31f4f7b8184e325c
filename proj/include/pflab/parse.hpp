#pragma once

#include <string>
#include <string_view>

#include "pflab/bipoly.hpp"
#include "pflab/kform.hpp"

namespace pflab {

// Textual polynomial grammar (whitespace-insensitive):
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number ['/' number] ['i'] | 'i' | ('x'|'y') ['^' number] | '(' poly ')'
//
// A Gaussian rational coefficient is written "(p/q+p'/q'i)". Omitted exponents
// and coefficients mean 1. Errors are reported with 1-based line and column.

BiPoly parse_bipoly(std::string_view text);

/// Form literals: a bare polynomial is a 0-form, "[p, q]" is p dx + q dy,
/// "[w]" is w dx^dy.
KForm parse_kform(std::string_view text);

}  // namespace pflab
