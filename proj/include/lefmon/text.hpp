#pragma once

#include <string>
#include <vector>

#include "lefmon/lefschetz.hpp"
#include "lefmon/monomial.hpp"

namespace lefmon {

// Parses "x1^3, x2^3, x3^3, x1*x2*x3" (also "x^3, y^3, z^3, x*y*z" with
// x,y,z,w as aliases for x1..x4). Whitespace-insensitive; '^' may be
// omitted for exponent 1. Errors name the offending token.
std::vector<Monomial> parse_generators(const std::string& s, int n);

// Parses "x - y", "x1 + 2*x2 - 3*x3"; integer coefficients, no constant
// term.
LinearForm parse_linear_form(const std::string& s, int n);

// Comma-separated list of linear forms.
std::vector<LinearForm> parse_linear_forms(const std::string& s, int n);

std::string to_string(const LinearForm& f);

}  // namespace lefmon
