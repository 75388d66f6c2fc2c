// Text frontend: polynomials, 1-forms, divisor specifications and truncated
// series, plus the canonical printer.  The grammar is documented in
// docs/grammar.ebnf, which is normative for all four entry points.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folinv/poly.hpp"

namespace folinv {

struct FormExpr {
    Poly dx_part; // P
    Poly dy_part; // Q
};

Poly parse_polynomial(std::string_view text);

// Univariate truncated series in t; the exponent of t is stored in the
// x-slot of each monomial.
Poly parse_series(std::string_view text);

FormExpr parse_one_form(std::string_view text);

struct DivisorTerm {
    long long coefficient = 1;
    std::string curve_text;
};

std::vector<DivisorTerm> parse_divisor(std::string_view text);

// Canonical printers; parse(print(p)) == p.
std::string to_string(const Poly& f);
std::string to_string(const FormExpr& w);
std::string to_string_series(const Poly& s);

} // namespace folinv
