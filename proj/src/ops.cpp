#include "fint/ops.hpp"

#include <functional>
#include <set>

namespace fint {

TermPtr substitute_term(const TermPtr& t, const TermSubst& subst) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      auto it = subst.find(t->as_var().name);
      return it == subst.end() ? t : it->second;
    }
    case Term::Kind::App:
      return Term::app(substitute_term(t->fn(), subst), substitute_term(t->arg(), subst));
    case Term::Kind::BoolConst:
      return t;
  }
  return t;
}

namespace {

bool name_free_in_subst(const std::string& name, const TermSubst& subst) {
  for (const auto& [key, term] : subst) {
    std::map<std::string, TypePtr> fv;
    collect_free_vars(term, fv);
    if (fv.count(name)) return true;
  }
  return false;
}

std::string fresh_against(std::string base, const TermSubst& subst, const FormulaPtr& body) {
  std::map<std::string, TypePtr> body_fv = free_vars(body);
  do {
    base += "'";
  } while (body_fv.count(base) || subst.count(base) || name_free_in_subst(base, subst));
  return base;
}

FormulaPtr subst_rec(const FormulaPtr& f, const TermSubst& subst) {
  if (subst.empty()) return f;
  auto sub_terms = [&](const std::vector<TermPtr>& ts) {
    std::vector<TermPtr> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(substitute_term(t, subst));
    return out;
  };
  // Binder handling shared by Forall / Exists / BForall.
  auto under_binder = [&](const Var& v, const FormulaPtr& body,
                          const std::function<FormulaPtr(Var, FormulaPtr)>& rebuild) {
    TermSubst inner = subst;
    inner.erase(v.name);
    if (inner.empty()) return rebuild(v, body);
    if (name_free_in_subst(v.name, inner)) {
      Var renamed{fresh_against(v.name, inner, body), v.type};
      inner[v.name] = Term::var(renamed);
      return rebuild(renamed, subst_rec(body, inner));
    }
    return rebuild(v, subst_rec(body, inner));
  };
  switch (f->kind()) {
    case Formula::Kind::Atom:
      return Formula::atom(f->pred(), sub_terms(f->args()));
    case Formula::Kind::EqBool:
      return Formula::eq_bool(substitute_term(f->eq_lhs(), subst), f->eq_value());
    case Formula::Kind::Mem:
      return Formula::mem(substitute_term(f->element(), subst),
                          substitute_term(f->set_term(), subst));
    case Formula::Kind::And:
      return Formula::conj(subst_rec(f->left(), subst), subst_rec(f->right(), subst));
    case Formula::Kind::Or:
      return Formula::disj(subst_rec(f->left(), subst), subst_rec(f->right(), subst));
    case Formula::Kind::Implies:
      return Formula::implies(subst_rec(f->left(), subst), subst_rec(f->right(), subst));
    case Formula::Kind::Tensor:
      return Formula::tensor(subst_rec(f->left(), subst), subst_rec(f->right(), subst));
    case Formula::Kind::Plus:
      return Formula::plus(subst_rec(f->left(), subst), subst_rec(f->right(), subst));
    case Formula::Kind::Lolli:
      return Formula::lolli(subst_rec(f->left(), subst), subst_rec(f->right(), subst));
    case Formula::Kind::Bang:
      return Formula::bang(f->modality(), subst_rec(f->body(), subst));
    case Formula::Kind::Forall:
      return under_binder(f->bound_var(), f->body(), [](Var v, FormulaPtr b) {
        return Formula::forall(std::move(v), std::move(b));
      });
    case Formula::Kind::Exists:
      return under_binder(f->bound_var(), f->body(), [](Var v, FormulaPtr b) {
        return Formula::exists(std::move(v), std::move(b));
      });
    case Formula::Kind::BForall: {
      TermPtr bound = substitute_term(f->bound_term(), subst);
      return under_binder(f->bound_var(), f->body(), [&](Var v, FormulaPtr b) {
        return Formula::bforall(std::move(v), bound, std::move(b));
      });
    }
    case Formula::Kind::Cond:
      return Formula::cond(substitute_term(f->selector(), subst),
                           subst_rec(f->then_branch(), subst),
                           subst_rec(f->else_branch(), subst));
  }
  return f;
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const TermSubst& subst) {
  return subst_rec(f, subst);
}

FormulaPtr substitute(const FormulaPtr& f, const Var& v, const TermPtr& t) {
  TypePtr tt = term_type(t);
  if (!type_equal(v.type, tt))
    throw TypeError("cannot substitute a term of type " + to_string(tt) +
                    " for variable " + v.name + " of type " + to_string(v.type));
  return subst_rec(f, {{v.name, t}});
}

namespace {

struct AlphaState {
  std::set<std::string> taken;  // free names of the whole formula
  unsigned next = 0;

  std::string fresh() {
    for (;;) {
      std::string candidate = "v" + std::to_string(next++);
      if (!taken.count(candidate)) return candidate;
    }
  }
};

TermPtr alpha_term(const TermPtr& t, const std::map<std::string, std::string>& env) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      auto it = env.find(t->as_var().name);
      if (it == env.end()) return t;
      return Term::var(it->second, t->as_var().type);
    }
    case Term::Kind::App:
      return Term::app(alpha_term(t->fn(), env), alpha_term(t->arg(), env));
    case Term::Kind::BoolConst:
      return t;
  }
  return t;
}

FormulaPtr alpha_rec(const FormulaPtr& f, std::map<std::string, std::string>& env,
                     AlphaState& st) {
  auto terms = [&](const std::vector<TermPtr>& ts) {
    std::vector<TermPtr> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(alpha_term(t, env));
    return out;
  };
  auto binder = [&](const Var& v, const FormulaPtr& body,
                    const std::function<FormulaPtr(Var, FormulaPtr)>& rebuild) {
    std::string name = st.fresh();
    auto it = env.find(v.name);
    std::optional<std::string> saved;
    if (it != env.end()) saved = it->second;
    env[v.name] = name;
    FormulaPtr b = alpha_rec(body, env, st);
    if (saved)
      env[v.name] = *saved;
    else
      env.erase(v.name);
    return rebuild(Var{name, v.type}, std::move(b));
  };
  switch (f->kind()) {
    case Formula::Kind::Atom:
      return Formula::atom(f->pred(), terms(f->args()));
    case Formula::Kind::EqBool:
      return Formula::eq_bool(alpha_term(f->eq_lhs(), env), f->eq_value());
    case Formula::Kind::Mem:
      return Formula::mem(alpha_term(f->element(), env), alpha_term(f->set_term(), env));
    case Formula::Kind::And:
      return Formula::conj(alpha_rec(f->left(), env, st), alpha_rec(f->right(), env, st));
    case Formula::Kind::Or:
      return Formula::disj(alpha_rec(f->left(), env, st), alpha_rec(f->right(), env, st));
    case Formula::Kind::Implies:
      return Formula::implies(alpha_rec(f->left(), env, st), alpha_rec(f->right(), env, st));
    case Formula::Kind::Tensor:
      return Formula::tensor(alpha_rec(f->left(), env, st), alpha_rec(f->right(), env, st));
    case Formula::Kind::Plus:
      return Formula::plus(alpha_rec(f->left(), env, st), alpha_rec(f->right(), env, st));
    case Formula::Kind::Lolli:
      return Formula::lolli(alpha_rec(f->left(), env, st), alpha_rec(f->right(), env, st));
    case Formula::Kind::Bang:
      return Formula::bang(f->modality(), alpha_rec(f->body(), env, st));
    case Formula::Kind::Forall:
      return binder(f->bound_var(), f->body(), [](Var v, FormulaPtr b) {
        return Formula::forall(std::move(v), std::move(b));
      });
    case Formula::Kind::Exists:
      return binder(f->bound_var(), f->body(), [](Var v, FormulaPtr b) {
        return Formula::exists(std::move(v), std::move(b));
      });
    case Formula::Kind::BForall: {
      TermPtr bound = alpha_term(f->bound_term(), env);
      return binder(f->bound_var(), f->body(), [&](Var v, FormulaPtr b) {
        return Formula::bforall(std::move(v), bound, std::move(b));
      });
    }
    case Formula::Kind::Cond:
      return Formula::cond(alpha_term(f->selector(), env), alpha_rec(f->then_branch(), env, st),
                           alpha_rec(f->else_branch(), env, st));
  }
  return f;
}

}  // namespace

FormulaPtr alpha_normalize(const FormulaPtr& f) {
  AlphaState st;
  for (const auto& [name, type] : free_vars(f)) st.taken.insert(name);
  std::map<std::string, std::string> env;
  return alpha_rec(f, env, st);
}

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return formula_equal(alpha_normalize(a), alpha_normalize(b));
}

namespace {

FormulaPtr expand_rec(const FormulaPtr& f, const std::optional<Modality>& m) {
  auto rec = [&](const FormulaPtr& g) { return expand_rec(g, m); };
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return f;
    case Formula::Kind::And:
      return Formula::conj(rec(f->left()), rec(f->right()));
    case Formula::Kind::Or:
      return Formula::disj(rec(f->left()), rec(f->right()));
    case Formula::Kind::Implies:
      return Formula::implies(rec(f->left()), rec(f->right()));
    case Formula::Kind::Tensor:
      return Formula::tensor(rec(f->left()), rec(f->right()));
    case Formula::Kind::Plus:
      return Formula::plus(rec(f->left()), rec(f->right()));
    case Formula::Kind::Lolli:
      return Formula::lolli(rec(f->left()), rec(f->right()));
    case Formula::Kind::Bang:
      return Formula::bang(f->modality(), rec(f->body()));
    case Formula::Kind::Forall:
      return Formula::forall(f->bound_var(), rec(f->body()));
    case Formula::Kind::Exists:
      return Formula::exists(f->bound_var(), rec(f->body()));
    case Formula::Kind::BForall:
      return Formula::bforall(f->bound_var(), f->bound_term(), rec(f->body()));
    case Formula::Kind::Cond: {
      FormulaPtr then_b = rec(f->then_branch());
      FormulaPtr else_b = rec(f->else_branch());
      FormulaPtr on = Formula::eq_bool(f->selector(), true);
      FormulaPtr off = Formula::eq_bool(f->selector(), false);
      if (m) {
        return Formula::tensor(Formula::lolli(Formula::bang(*m, on), then_b),
                               Formula::lolli(Formula::bang(*m, off), else_b));
      }
      return Formula::conj(Formula::implies(on, then_b), Formula::implies(off, else_b));
    }
  }
  return f;
}

}  // namespace

FormulaPtr expand_cond(const FormulaPtr& f, std::optional<Modality> bang_label) {
  Logic l = logic_of(f);
  if (l == Logic::Mixed)
    throw ValidationError("expand_cond: formula mixes intuitionistic and affine connectives");
  if (l == Logic::Affine && !bang_label)
    throw ValidationError("expand_cond: affine conditional expansion needs a bang label");
  if (l == Logic::Intuitionistic && bang_label)
    throw ValidationError("expand_cond: bang label given for an intuitionistic formula");
  return expand_rec(f, bang_label);
}

FormulaPtr relabel_bangs(const FormulaPtr& f, const Modality& m) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return f;
    case Formula::Kind::And:
      return Formula::conj(relabel_bangs(f->left(), m), relabel_bangs(f->right(), m));
    case Formula::Kind::Or:
      return Formula::disj(relabel_bangs(f->left(), m), relabel_bangs(f->right(), m));
    case Formula::Kind::Implies:
      return Formula::implies(relabel_bangs(f->left(), m), relabel_bangs(f->right(), m));
    case Formula::Kind::Tensor:
      return Formula::tensor(relabel_bangs(f->left(), m), relabel_bangs(f->right(), m));
    case Formula::Kind::Plus:
      return Formula::plus(relabel_bangs(f->left(), m), relabel_bangs(f->right(), m));
    case Formula::Kind::Lolli:
      return Formula::lolli(relabel_bangs(f->left(), m), relabel_bangs(f->right(), m));
    case Formula::Kind::Bang:
      return Formula::bang(m, relabel_bangs(f->body(), m));
    case Formula::Kind::Forall:
      return Formula::forall(f->bound_var(), relabel_bangs(f->body(), m));
    case Formula::Kind::Exists:
      return Formula::exists(f->bound_var(), relabel_bangs(f->body(), m));
    case Formula::Kind::BForall:
      return Formula::bforall(f->bound_var(), f->bound_term(), relabel_bangs(f->body(), m));
    case Formula::Kind::Cond:
      return Formula::cond(f->selector(), relabel_bangs(f->then_branch(), m),
                           relabel_bangs(f->else_branch(), m));
  }
  return f;
}

}  // namespace fint
