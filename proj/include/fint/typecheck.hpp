#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fint/formula.hpp"

namespace fint {

// Predicate declarations. All argument types are N in the stock signature;
// arbitrary simple types are accepted when built programmatically.
struct Signature {
  struct Pred {
    std::string name;
    std::vector<TypePtr> arg_types;
  };

  std::vector<Pred> preds;

  const Pred* find(const std::string& name) const;
};

// P:0, Q:0, R:N.
Signature default_signature();

// One predicate per line, "name : N^k". Blank lines and '#' comments are
// skipped. Throws ValidationError on malformed lines.
Signature parse_signature(const std::string& text);

struct TypecheckIssue {
  std::string path;  // root, left.right, body, then, arg0, ...
  std::string message;
};

struct TypecheckResult {
  std::vector<TypecheckIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string describe() const;
};

// Confirms terms are well-typed, membership and bounded quantifiers are
// set-coherent, same-named variables agree on their type within a scope,
// and the tree stays inside a single logic.
TypecheckResult typecheck(const FormulaPtr& f, const Signature& sig);

}  // namespace fint
