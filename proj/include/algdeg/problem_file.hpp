#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "algdeg/kkt.hpp"

namespace algdeg {

// Line-oriented problem format:
//
//   # comment
//   variables: 3          (optional; otherwise the largest xk index used)
//   objective: 47*x1^5 + 5*x1*x2^4 - 92*x1*x3^2
//   constraint: x1 + x2 - 1
//
// Exactly one objective; any number of constraints. Only x1..xn are valid
// variables. Throws ParseError (with line and column) on syntax errors,
// unknown variables and constant constraints.
ProblemSpec parse_problem(std::string_view text, const PrimeField& field);
ProblemSpec parse_problem_file(const std::filesystem::path& path, const PrimeField& field);

std::string serialize_problem(const ProblemSpec& spec);

}  // namespace algdeg
