#include "fint/formula.hpp"

#include <tuple>

namespace fint {

namespace {
unsigned level_key(const Modality& m) {
  // Orders stein levels with infinity last.
  return m.stein_level ? *m.stein_level : ~0u;
}
}  // namespace

bool operator==(const Modality& a, const Modality& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != Modality::Kind::Stein) return true;
  return a.stein_level == b.stein_level;
}

bool operator!=(const Modality& a, const Modality& b) { return !(a == b); }

bool operator<(const Modality& a, const Modality& b) {
  return std::make_tuple(static_cast<int>(a.kind), level_key(a)) <
         std::make_tuple(static_cast<int>(b.kind), level_key(b));
}

std::string to_string(const Modality& m) {
  switch (m.kind) {
    case Modality::Kind::K: return "k";
    case Modality::Kind::D: return "d";
    case Modality::Kind::G: return "g";
    case Modality::Kind::KT: return "kt";
    case Modality::Kind::DT: return "dt";
    case Modality::Kind::Stein:
      return m.stein_level ? "stein[" + std::to_string(*m.stein_level) + "]" : "stein[inf]";
  }
  return "?";
}

FormulaPtr Formula::atom(std::string pred, std::vector<TermPtr> args) {
  auto* f = new Formula();
  f->kind_ = Kind::Atom;
  f->pred_ = std::move(pred);
  f->args_ = std::move(args);
  return FormulaPtr(f);
}

FormulaPtr Formula::eq_bool(TermPtr lhs, bool rhs) {
  auto* f = new Formula();
  f->kind_ = Kind::EqBool;
  f->term_a_ = std::move(lhs);
  f->eq_value_ = rhs;
  return FormulaPtr(f);
}

FormulaPtr Formula::mem(TermPtr element, TermPtr set) {
  auto* f = new Formula();
  f->kind_ = Kind::Mem;
  f->term_a_ = std::move(element);
  f->term_b_ = std::move(set);
  return FormulaPtr(f);
}

#define FINT_BINARY(NAME, KIND)                          \
  FormulaPtr Formula::NAME(FormulaPtr l, FormulaPtr r) { \
    auto* f = new Formula();                             \
    f->kind_ = Kind::KIND;                               \
    f->sub_a_ = std::move(l);                            \
    f->sub_b_ = std::move(r);                            \
    return FormulaPtr(f);                                \
  }

FINT_BINARY(conj, And)
FINT_BINARY(disj, Or)
FINT_BINARY(implies, Implies)
FINT_BINARY(tensor, Tensor)
FINT_BINARY(plus, Plus)
FINT_BINARY(lolli, Lolli)
#undef FINT_BINARY

FormulaPtr Formula::bang(Modality m, FormulaPtr body) {
  auto* f = new Formula();
  f->kind_ = Kind::Bang;
  f->modality_ = m;
  f->sub_a_ = std::move(body);
  return FormulaPtr(f);
}

FormulaPtr Formula::forall(Var v, FormulaPtr body) {
  auto* f = new Formula();
  f->kind_ = Kind::Forall;
  f->var_ = std::move(v);
  f->sub_a_ = std::move(body);
  return FormulaPtr(f);
}

FormulaPtr Formula::exists(Var v, FormulaPtr body) {
  auto* f = new Formula();
  f->kind_ = Kind::Exists;
  f->var_ = std::move(v);
  f->sub_a_ = std::move(body);
  return FormulaPtr(f);
}

FormulaPtr Formula::bforall(Var v, TermPtr bound, FormulaPtr body) {
  auto* f = new Formula();
  f->kind_ = Kind::BForall;
  f->var_ = std::move(v);
  f->term_a_ = std::move(bound);
  f->sub_a_ = std::move(body);
  return FormulaPtr(f);
}

FormulaPtr Formula::cond(TermPtr selector, FormulaPtr then_branch, FormulaPtr else_branch) {
  auto* f = new Formula();
  f->kind_ = Kind::Cond;
  f->term_a_ = std::move(selector);
  f->sub_a_ = std::move(then_branch);
  f->sub_b_ = std::move(else_branch);
  return FormulaPtr(f);
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::Atom: {
      if (a->pred() != b->pred() || a->args().size() != b->args().size()) return false;
      for (std::size_t i = 0; i < a->args().size(); ++i)
        if (!term_equal(a->args()[i], b->args()[i])) return false;
      return true;
    }
    case Formula::Kind::EqBool:
      return a->eq_value() == b->eq_value() && term_equal(a->eq_lhs(), b->eq_lhs());
    case Formula::Kind::Mem:
      return term_equal(a->element(), b->element()) && term_equal(a->set_term(), b->set_term());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Tensor:
    case Formula::Kind::Plus:
    case Formula::Kind::Lolli:
      return formula_equal(a->left(), b->left()) && formula_equal(a->right(), b->right());
    case Formula::Kind::Bang:
      return a->modality() == b->modality() && formula_equal(a->body(), b->body());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return var_equal(a->bound_var(), b->bound_var()) && formula_equal(a->body(), b->body());
    case Formula::Kind::BForall:
      return var_equal(a->bound_var(), b->bound_var()) &&
             term_equal(a->bound_term(), b->bound_term()) && formula_equal(a->body(), b->body());
    case Formula::Kind::Cond:
      return term_equal(a->selector(), b->selector()) &&
             formula_equal(a->then_branch(), b->then_branch()) &&
             formula_equal(a->else_branch(), b->else_branch());
  }
  return false;
}

namespace {

void free_vars_rec(const FormulaPtr& f, std::map<std::string, TypePtr>& bound_shadow,
                   std::map<std::string, TypePtr>& out) {
  auto term_fv = [&](const TermPtr& t) {
    std::map<std::string, TypePtr> tv;
    collect_free_vars(t, tv);
    for (auto& [name, type] : tv)
      if (!bound_shadow.count(name)) out.emplace(name, type);
  };
  auto with_binder = [&](const Var& v, const FormulaPtr& body) {
    auto it = bound_shadow.find(v.name);
    std::optional<TypePtr> saved;
    if (it != bound_shadow.end()) saved = it->second;
    bound_shadow[v.name] = v.type;
    free_vars_rec(body, bound_shadow, out);
    if (saved)
      bound_shadow[v.name] = *saved;
    else
      bound_shadow.erase(v.name);
  };
  switch (f->kind()) {
    case Formula::Kind::Atom:
      for (const auto& a : f->args()) term_fv(a);
      return;
    case Formula::Kind::EqBool:
      term_fv(f->eq_lhs());
      return;
    case Formula::Kind::Mem:
      term_fv(f->element());
      term_fv(f->set_term());
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Tensor:
    case Formula::Kind::Plus:
    case Formula::Kind::Lolli:
      free_vars_rec(f->left(), bound_shadow, out);
      free_vars_rec(f->right(), bound_shadow, out);
      return;
    case Formula::Kind::Bang:
      free_vars_rec(f->body(), bound_shadow, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      with_binder(f->bound_var(), f->body());
      return;
    case Formula::Kind::BForall:
      term_fv(f->bound_term());
      with_binder(f->bound_var(), f->body());
      return;
    case Formula::Kind::Cond:
      term_fv(f->selector());
      free_vars_rec(f->then_branch(), bound_shadow, out);
      free_vars_rec(f->else_branch(), bound_shadow, out);
      return;
  }
}

void all_names_term(const TermPtr& t, std::map<std::string, unsigned>& out) {
  std::map<std::string, TypePtr> tv;
  collect_free_vars(t, tv);
  for (auto& [name, type] : tv) out[name]++;
}

}  // namespace

std::map<std::string, TypePtr> free_vars(const FormulaPtr& f) {
  std::map<std::string, TypePtr> out;
  std::map<std::string, TypePtr> shadow;
  free_vars_rec(f, shadow, out);
  return out;
}

void collect_all_names(const FormulaPtr& f, std::map<std::string, unsigned>& out) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      for (const auto& a : f->args()) all_names_term(a, out);
      return;
    case Formula::Kind::EqBool:
      all_names_term(f->eq_lhs(), out);
      return;
    case Formula::Kind::Mem:
      all_names_term(f->element(), out);
      all_names_term(f->set_term(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Tensor:
    case Formula::Kind::Plus:
    case Formula::Kind::Lolli:
      collect_all_names(f->left(), out);
      collect_all_names(f->right(), out);
      return;
    case Formula::Kind::Bang:
      collect_all_names(f->body(), out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out[f->bound_var().name]++;
      collect_all_names(f->body(), out);
      return;
    case Formula::Kind::BForall:
      out[f->bound_var().name]++;
      all_names_term(f->bound_term(), out);
      collect_all_names(f->body(), out);
      return;
    case Formula::Kind::Cond:
      all_names_term(f->selector(), out);
      collect_all_names(f->then_branch(), out);
      collect_all_names(f->else_branch(), out);
      return;
  }
}

namespace {
Logic combine(Logic a, Logic b) {
  if (a == Logic::Neutral) return b;
  if (b == Logic::Neutral) return a;
  if (a == b) return a;
  return Logic::Mixed;
}
}  // namespace

Logic logic_of(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return Logic::Neutral;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return combine(Logic::Intuitionistic, combine(logic_of(f->left()), logic_of(f->right())));
    case Formula::Kind::Tensor:
    case Formula::Kind::Plus:
    case Formula::Kind::Lolli:
      return combine(Logic::Affine, combine(logic_of(f->left()), logic_of(f->right())));
    case Formula::Kind::Bang:
      return combine(Logic::Affine, logic_of(f->body()));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return logic_of(f->body());
    case Formula::Kind::BForall:
      return logic_of(f->body());
    case Formula::Kind::Cond:
      return combine(logic_of(f->then_branch()), logic_of(f->else_branch()));
  }
  return Logic::Mixed;
}

bool fits_logic(const FormulaPtr& f, Logic target) {
  Logic l = logic_of(f);
  return l == target || l == Logic::Neutral;
}

void require_logic(const FormulaPtr& f, Logic target, const std::string& context) {
  Logic l = logic_of(f);
  if (l == Logic::Mixed)
    throw ValidationError(context + ": formula mixes intuitionistic and affine connectives");
  if (l != target && l != Logic::Neutral) {
    const char* want = target == Logic::Intuitionistic ? "intuitionistic" : "affine";
    throw ValidationError(context + ": expected an " + want + " formula");
  }
}

bool contains_kind(const FormulaPtr& f, Formula::Kind k) {
  if (f->kind() == k) return true;
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return false;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Tensor:
    case Formula::Kind::Plus:
    case Formula::Kind::Lolli:
      return contains_kind(f->left(), k) || contains_kind(f->right(), k);
    case Formula::Kind::Bang:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
    case Formula::Kind::BForall:
      return contains_kind(f->body(), k);
    case Formula::Kind::Cond:
      return contains_kind(f->then_branch(), k) || contains_kind(f->else_branch(), k);
  }
  return false;
}

}  // namespace fint
