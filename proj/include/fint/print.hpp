#pragma once

#include <string>

#include "fint/formula.hpp"

namespace fint {

// Minimal-parenthesis rendering. Precedence, loosest first: quantifiers
// and conditionals; -> and -o (right associative); & | * + (left
// associative, one level); ! ; atoms. Application is juxtaposition.
std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);

}  // namespace fint
