#pragma once

#include <string>

#include "fint/formula.hpp"

namespace fint {

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  unsigned line = 1;
  unsigned column = 1;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, SourceSpan span)
      : std::runtime_error(message), span_(span) {}
  const SourceSpan& span() const { return span_; }

private:
  SourceSpan span_;
};

// Grammar (one grammar for both logics; logic purity is checked after
// parsing):
//   type    := 'N' | 'B' | type '->' type | 'set(' type ')'
//   formula := atom | '(' formula ')'
//            | formula ('&'|'|'|'*'|'+') formula
//            | formula ('->'|'-o') formula
//            | '!' mod formula
//            | ('forall'|'exists') ident ':' type ['in' term] '.' formula
//            | term '?' formula ':' formula
//            | term '=' ('true'|'false') | term 'in' term
//   mod     := 'k'|'d'|'g'|'kt'|'dt'|'stein[' (nat|'inf') ']'
//   atom    := ident | ident '(' term {',' term} ')'
//   term    := ident | term term | 'true' | 'false' | '(' term ')'
//
// Free variables receive types inferred from use: atom and application
// arguments N, conditional selectors and boolean equations B, membership
// and bounded-quantifier bounds set(element type). Conflicting uses are
// parse errors. Binder-ascribed types always win inside their scope.
FormulaPtr parse_formula(const std::string& text);

TypePtr parse_type(const std::string& text);

}  // namespace fint
