#include "fint/translate.hpp"

namespace fint {

namespace {

FormulaPtr star(const FormulaPtr& f, bool simplified, const Modality& m) {
  auto rec = [&](const FormulaPtr& g) { return star(g, simplified, m); };
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return f;
    case Formula::Kind::And:
      return Formula::tensor(rec(f->left()), rec(f->right()));
    case Formula::Kind::Or:
      if (simplified) return Formula::plus(rec(f->left()), rec(f->right()));
      return Formula::plus(Formula::bang(m, rec(f->left())), Formula::bang(m, rec(f->right())));
    case Formula::Kind::Implies:
      return Formula::lolli(Formula::bang(m, rec(f->left())), rec(f->right()));
    case Formula::Kind::Forall:
      return Formula::forall(f->bound_var(), rec(f->body()));
    case Formula::Kind::Exists:
      if (simplified) return Formula::exists(f->bound_var(), rec(f->body()));
      return Formula::exists(f->bound_var(), Formula::bang(m, rec(f->body())));
    case Formula::Kind::BForall:
      return Formula::bforall(f->bound_var(), f->bound_term(), rec(f->body()));
    case Formula::Kind::Cond:
      return Formula::cond(f->selector(), rec(f->then_branch()), rec(f->else_branch()));
    default:
      throw ValidationError("translate: input is not an intuitionistic formula");
  }
}

FormulaPtr circ(const FormulaPtr& f, const Modality& m) {
  auto rec = [&](const FormulaPtr& g) { return circ(g, m); };
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return Formula::bang(m, f);
    case Formula::Kind::And:
      return Formula::tensor(rec(f->left()), rec(f->right()));
    case Formula::Kind::Or:
      return Formula::plus(rec(f->left()), rec(f->right()));
    case Formula::Kind::Implies:
      return Formula::bang(m, Formula::lolli(rec(f->left()), rec(f->right())));
    case Formula::Kind::Forall:
      return Formula::bang(m, Formula::forall(f->bound_var(), rec(f->body())));
    case Formula::Kind::Exists:
      return Formula::exists(f->bound_var(), rec(f->body()));
    case Formula::Kind::BForall:
      return Formula::bang(m, Formula::bforall(f->bound_var(), f->bound_term(), rec(f->body())));
    case Formula::Kind::Cond:
      return Formula::cond(f->selector(), rec(f->then_branch()), rec(f->else_branch()));
    default:
      throw ValidationError("translate: input is not an intuitionistic formula");
  }
}

}  // namespace

FormulaPtr translate(const FormulaPtr& f, TranslationMode mode, Modality bang_label) {
  require_logic(f, Logic::Intuitionistic, "translate");
  switch (mode) {
    case TranslationMode::StarFull:
      return star(f, false, bang_label);
    case TranslationMode::StarSimplified:
      return star(f, true, bang_label);
    case TranslationMode::Circ:
      return circ(f, bang_label);
  }
  throw ValidationError("translate: unknown mode");
}

FormulaPtr forget(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return f;
    case Formula::Kind::Tensor:
      return Formula::conj(forget(f->left()), forget(f->right()));
    case Formula::Kind::Plus:
      return Formula::disj(forget(f->left()), forget(f->right()));
    case Formula::Kind::Lolli:
      return Formula::implies(forget(f->left()), forget(f->right()));
    case Formula::Kind::Bang:
      return forget(f->body());
    case Formula::Kind::Forall:
      return Formula::forall(f->bound_var(), forget(f->body()));
    case Formula::Kind::Exists:
      return Formula::exists(f->bound_var(), forget(f->body()));
    case Formula::Kind::BForall:
      return Formula::bforall(f->bound_var(), f->bound_term(), forget(f->body()));
    case Formula::Kind::Cond:
      return Formula::cond(f->selector(), forget(f->then_branch()), forget(f->else_branch()));
    default:
      throw ValidationError("forget: input is not an affine formula");
  }
}

std::pair<FormulaPtr, FormulaPtr> extra_principles(const FormulaPtr& a, const FormulaPtr& b,
                                                   const Modality& m, const Var& v) {
  require_logic(a, Logic::Affine, "extra_principles");
  require_logic(b, Logic::Affine, "extra_principles");
  FormulaPtr dist = Formula::lolli(Formula::plus(Formula::bang(m, a), Formula::bang(m, b)),
                                   Formula::bang(m, Formula::plus(a, b)));
  FormulaPtr pull = Formula::lolli(Formula::exists(v, Formula::bang(m, a)),
                                   Formula::bang(m, Formula::exists(v, a)));
  return {dist, pull};
}

}  // namespace fint
