#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fint/types.hpp"

namespace fint {

struct Var {
  std::string name;
  TypePtr type;
};

bool var_equal(const Var& a, const Var& b);

// Ordered tuple of typed variables (possibly empty). Names are pairwise
// distinct within one tuple; concatenation keeps the left tuple first.
using VarTuple = std::vector<Var>;

std::vector<TypePtr> tuple_types(const VarTuple& vs);
VarTuple tuple_concat(VarTuple a, const VarTuple& b);
bool tuple_names_distinct(const VarTuple& vs);

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Terms are variables, applications and boolean constants. There is no
// lambda; interpretation outputs only ever apply variables to arguments.
class Term {
public:
  enum class Kind { Var, App, BoolConst };

  static TermPtr var(Var v);
  static TermPtr var(std::string name, TypePtr type);
  static TermPtr app(TermPtr fn, TermPtr arg);
  // head applied to args left to right: app(app(head, a0), a1) ...
  static TermPtr app_chain(TermPtr head, const std::vector<TermPtr>& args);
  static TermPtr bool_const(bool value);

  Kind kind() const { return kind_; }
  const Var& as_var() const { return var_; }
  const TermPtr& fn() const { return fn_; }
  const TermPtr& arg() const { return arg_; }
  bool bool_value() const { return bool_value_; }

private:
  Term() = default;
  Kind kind_ = Kind::BoolConst;
  Var var_;
  TermPtr fn_;
  TermPtr arg_;
  bool bool_value_ = false;
};

bool term_equal(const TermPtr& a, const TermPtr& b);

// Throws TypeError when an application's function side is not an arrow or
// its domain does not match the argument.
TypePtr term_type(const TermPtr& t);

void collect_free_vars(const TermPtr& t, std::map<std::string, TypePtr>& out);

}  // namespace fint
