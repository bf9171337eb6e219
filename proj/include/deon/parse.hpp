#pragma once

#include <string>
#include <string_view>

#include "deon/problem.hpp"

namespace deon {

// Parses .norm source text. Declarations must precede use. Throws
// SyntaxError (with line/column) on malformed text and ValidationError on
// declaration violations; a query explicitly requesting the tableau engine
// triggers eager fragment validation of all formulas.
Problem parse_problem(std::string_view text);

// Parses a single formula (e.g. a CLI argument) against an existing
// problem's atom and modality tables.
Formula parse_formula(std::string_view text, const Problem& context);

// Canonical source rendering; parse_problem(render_problem(p)) == p.
std::string render_problem(const Problem& p);

}  // namespace deon
