#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "algdeg/polynomial.hpp"

namespace algdeg {

// Display names for ring variables, index i named names[i].
using VariableNames = std::vector<std::string>;

// x1..xn followed by l1..lm.
VariableNames default_names(std::size_t num_x, std::size_t num_multipliers = 0);
// x0, x1, ..., xn for rings produced by homogenize().
VariableNames homogeneous_names(std::size_t num_x);

// Sum of terms with signed coefficients in (-p/2, p/2], e.g.
// `47*x1^5 + 5*x1*x2^4 - 92*x1*x3^2`. The zero polynomial prints as `0`.
std::string to_string(const Polynomial& f, const VariableNames& names);

// Parses `+ - * ^` and parentheses over integer literals and the given
// variable names; whitespace is ignored and literals are reduced mod p.
// Throws ParseError carrying `line` and a 1-based column.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const VariableNames& names,
                            std::size_t line = 1);

}  // namespace algdeg
