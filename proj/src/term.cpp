#include "fint/term.hpp"

#include <set>

namespace fint {

bool var_equal(const Var& a, const Var& b) {
  return a.name == b.name && type_equal(a.type, b.type);
}

std::vector<TypePtr> tuple_types(const VarTuple& vs) {
  std::vector<TypePtr> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.type);
  return out;
}

VarTuple tuple_concat(VarTuple a, const VarTuple& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool tuple_names_distinct(const VarTuple& vs) {
  std::set<std::string> seen;
  for (const auto& v : vs)
    if (!seen.insert(v.name).second) return false;
  return true;
}

TermPtr Term::var(Var v) {
  auto* m = new Term();
  m->kind_ = Kind::Var;
  m->var_ = std::move(v);
  return TermPtr(m);
}

TermPtr Term::var(std::string name, TypePtr type) {
  return var(Var{std::move(name), std::move(type)});
}

TermPtr Term::app(TermPtr fn, TermPtr arg) {
  auto* m = new Term();
  m->kind_ = Kind::App;
  m->fn_ = std::move(fn);
  m->arg_ = std::move(arg);
  return TermPtr(m);
}

TermPtr Term::app_chain(TermPtr head, const std::vector<TermPtr>& args) {
  TermPtr t = std::move(head);
  for (const auto& a : args) t = app(t, a);
  return t;
}

TermPtr Term::bool_const(bool value) {
  auto* m = new Term();
  m->kind_ = Kind::BoolConst;
  m->bool_value_ = value;
  return TermPtr(m);
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Term::Kind::Var:
      return var_equal(a->as_var(), b->as_var());
    case Term::Kind::App:
      return term_equal(a->fn(), b->fn()) && term_equal(a->arg(), b->arg());
    case Term::Kind::BoolConst:
      return a->bool_value() == b->bool_value();
  }
  return false;
}

TypePtr term_type(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var:
      return t->as_var().type;
    case Term::Kind::App: {
      TypePtr ft = term_type(t->fn());
      if (ft->kind() != SimpleType::Kind::Arrow)
        throw TypeError("applied term does not have a function type");
      TypePtr at = term_type(t->arg());
      if (!type_equal(ft->domain(), at))
        throw TypeError("argument type " + to_string(at) +
                        " does not match function domain " + to_string(ft->domain()));
      return ft->codomain();
    }
    case Term::Kind::BoolConst:
      return SimpleType::boolean();
  }
  throw TypeError("malformed term");
}

void collect_free_vars(const TermPtr& t, std::map<std::string, TypePtr>& out) {
  switch (t->kind()) {
    case Term::Kind::Var:
      out.emplace(t->as_var().name, t->as_var().type);
      return;
    case Term::Kind::App:
      collect_free_vars(t->fn(), out);
      collect_free_vars(t->arg(), out);
      return;
    case Term::Kind::BoolConst:
      return;
  }
}

}  // namespace fint
