#include "fint/types.hpp"

#include <algorithm>

namespace fint {

TypePtr SimpleType::nat() {
  static const TypePtr t(new SimpleType(Kind::Nat, nullptr, nullptr));
  return t;
}

TypePtr SimpleType::boolean() {
  static const TypePtr t(new SimpleType(Kind::Bool, nullptr, nullptr));
  return t;
}

TypePtr SimpleType::arrow(TypePtr domain, TypePtr codomain) {
  return TypePtr(new SimpleType(Kind::Arrow, std::move(domain), std::move(codomain)));
}

TypePtr SimpleType::finset(TypePtr element) {
  return TypePtr(new SimpleType(Kind::FinSet, std::move(element), nullptr));
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case SimpleType::Kind::Nat:
    case SimpleType::Kind::Bool:
      return true;
    case SimpleType::Kind::Arrow:
      return type_equal(a->domain(), b->domain()) && type_equal(a->codomain(), b->codomain());
    case SimpleType::Kind::FinSet:
      return type_equal(a->element(), b->element());
  }
  return false;
}

bool type_lists_equal(const std::vector<TypePtr>& a, const std::vector<TypePtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!type_equal(a[i], b[i])) return false;
  return true;
}

unsigned type_level(const TypePtr& t) {
  switch (t->kind()) {
    case SimpleType::Kind::Nat:
    case SimpleType::Kind::Bool:
      return 0;
    case SimpleType::Kind::Arrow:
      return std::max(type_level(t->domain()) + 1, type_level(t->codomain()));
    case SimpleType::Kind::FinSet:
      return type_level(t->element());
  }
  return 0;
}

TypePtr pure_type(unsigned m) {
  TypePtr t = SimpleType::nat();
  for (unsigned i = 0; i < m; ++i) t = SimpleType::arrow(t, SimpleType::nat());
  return t;
}

std::string to_string(const TypePtr& t) {
  switch (t->kind()) {
    case SimpleType::Kind::Nat:
      return "N";
    case SimpleType::Kind::Bool:
      return "B";
    case SimpleType::Kind::Arrow: {
      std::string dom = to_string(t->domain());
      if (t->domain()->kind() == SimpleType::Kind::Arrow) dom = "(" + dom + ")";
      return dom + "->" + to_string(t->codomain());
    }
    case SimpleType::Kind::FinSet:
      return "set(" + to_string(t->element()) + ")";
  }
  return "?";
}

}  // namespace fint
