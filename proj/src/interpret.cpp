#include "fint/interpret.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fint/ops.hpp"

namespace fint {

// ---------------------------------------------------------------------------
// Bounding specs

BoundingSpec BoundingSpec::for_modality(const Modality& m) {
  bool truth = m.kind == Modality::Kind::KT || m.kind == Modality::Kind::DT;
  return BoundingSpec(m, truth);
}

std::vector<TypePtr> BoundingSpec::bound_types(const std::vector<TypePtr>& challenge_types) const {
  std::vector<TypePtr> out;
  switch (modality_.kind) {
    case Modality::Kind::K:
    case Modality::Kind::KT:
      return out;
    case Modality::Kind::G:
      return challenge_types;
    case Modality::Kind::D:
    case Modality::Kind::DT:
      for (const auto& t : challenge_types) out.push_back(SimpleType::finset(t));
      return out;
    case Modality::Kind::Stein: {
      if (!modality_.stein_level) return out;  // infinite cutoff: nothing bounded
      unsigned cutoff = *modality_.stein_level;
      TypePtr index = pure_type(cutoff);
      for (const auto& t : challenge_types)
        if (type_level(t) >= cutoff) out.push_back(SimpleType::arrow(index, t));
      return out;
    }
  }
  return out;
}

FormulaPtr BoundingSpec::build(const VarTuple& challenges, const std::vector<TermPtr>& bounds,
                               const FormulaPtr& body) const {
  auto forall_chain = [](const VarTuple& vs, FormulaPtr b) {
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) b = Formula::forall(*it, b);
    return b;
  };
  switch (modality_.kind) {
    case Modality::Kind::K:
    case Modality::Kind::KT:
      return forall_chain(challenges, body);
    case Modality::Kind::G: {
      TermSubst subst;
      for (std::size_t i = 0; i < challenges.size(); ++i)
        subst[challenges[i].name] = bounds[i];
      return substitute(body, subst);
    }
    case Modality::Kind::D:
    case Modality::Kind::DT: {
      FormulaPtr b = body;
      for (std::size_t i = challenges.size(); i-- > 0;)
        b = Formula::bforall(challenges[i], bounds[i], b);
      return b;
    }
    case Modality::Kind::Stein: {
      if (!modality_.stein_level) return forall_chain(challenges, body);
      unsigned cutoff = *modality_.stein_level;
      VarTuple low, high;
      for (const auto& v : challenges)
        (type_level(v.type) < cutoff ? low : high).push_back(v);
      FormulaPtr b = body;
      for (std::size_t i = high.size(); i-- > 0;) b = Formula::bforall(high[i], bounds[i], b);
      return forall_chain(low, b);
    }
  }
  return body;
}

// ---------------------------------------------------------------------------
// Registry

Registry Registry::all() {
  Registry r;
  r.allow_all_ = true;
  return r;
}

Registry Registry::only(std::vector<Modality> allowed) {
  Registry r;
  r.allowed_ = std::move(allowed);
  return r;
}

BoundingSpec Registry::spec_for(const Modality& m) const {
  if (!allow_all_) {
    bool found = false;
    for (const auto& a : allowed_)
      if (a == m) found = true;
    if (!found) throw ValidationError("unregistered modality " + to_string(m));
  }
  return BoundingSpec::for_modality(m);
}

// ---------------------------------------------------------------------------
// Shared interpreter plumbing

namespace {

constexpr char kInternalMark = '%';

struct NameGen {
  unsigned next = 0;
  Var fresh(const TypePtr& t) { return Var{kInternalMark + std::to_string(next++), t}; }
};

std::vector<TermPtr> var_terms(const VarTuple& vs) {
  std::vector<TermPtr> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(Term::var(v));
  return out;
}

TypePtr curry(const std::vector<TypePtr>& domains, TypePtr cod) {
  for (auto it = domains.rbegin(); it != domains.rend(); ++it)
    cod = SimpleType::arrow(*it, cod);
  return cod;
}

FormulaPtr forall_chain(const VarTuple& vs, FormulaPtr body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = Formula::forall(*it, body);
  return body;
}

// Function witnesses f: one per target variable, curried over the given
// argument tuple. Returns the fresh functions and the application terms
// f a0 a1 ... to substitute for the targets.
struct FunctionWitnesses {
  VarTuple functions;
  TermSubst replace_targets;
};

FunctionWitnesses make_functions(NameGen& gen, const VarTuple& arguments,
                                 const VarTuple& targets) {
  FunctionWitnesses out;
  std::vector<TypePtr> arg_types = tuple_types(arguments);
  std::vector<TermPtr> arg_terms = var_terms(arguments);
  for (const auto& t : targets) {
    Var fn = gen.fresh(curry(arg_types, t.type));
    out.functions.push_back(fn);
    out.replace_targets[t.name] = Term::app_chain(Term::var(fn), arg_terms);
  }
  return out;
}

bool is_internal(const std::string& name) { return !name.empty() && name[0] == kInternalMark; }

// Renames leftover internal binders (introduced by bounding constructors
// and quantifier blocks) to v0, v1, ... in depth-first order.
FormulaPtr rename_internal_binders(const FormulaPtr& f, const std::set<std::string>& taken) {
  struct State {
    const std::set<std::string>* taken;
    unsigned next = 0;
    std::string fresh() {
      for (;;) {
        std::string c = "v" + std::to_string(next++);
        if (!taken->count(c)) return c;
      }
    }
  } st{&taken};

  std::function<FormulaPtr(const FormulaPtr&)> rec = [&](const FormulaPtr& g) -> FormulaPtr {
    switch (g->kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::EqBool:
      case Formula::Kind::Mem:
        return g;
      case Formula::Kind::And:
        return Formula::conj(rec(g->left()), rec(g->right()));
      case Formula::Kind::Or:
        return Formula::disj(rec(g->left()), rec(g->right()));
      case Formula::Kind::Implies:
        return Formula::implies(rec(g->left()), rec(g->right()));
      case Formula::Kind::Tensor:
        return Formula::tensor(rec(g->left()), rec(g->right()));
      case Formula::Kind::Plus:
        return Formula::plus(rec(g->left()), rec(g->right()));
      case Formula::Kind::Lolli:
        return Formula::lolli(rec(g->left()), rec(g->right()));
      case Formula::Kind::Bang:
        return Formula::bang(g->modality(), rec(g->body()));
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
      case Formula::Kind::BForall: {
        Var v = g->bound_var();
        FormulaPtr body = g->body();
        if (is_internal(v.name)) {
          Var renamed{st.fresh(), v.type};
          body = substitute(body, {{v.name, Term::var(renamed)}});
          v = renamed;
        }
        body = rec(body);
        if (g->kind() == Formula::Kind::Forall) return Formula::forall(v, body);
        if (g->kind() == Formula::Kind::Exists) return Formula::exists(v, body);
        return Formula::bforall(v, g->bound_term(), body);
      }
      case Formula::Kind::Cond:
        return Formula::cond(g->selector(), rec(g->then_branch()), rec(g->else_branch()));
    }
    return g;
  };
  return rec(f);
}

InterpretedFormula finalize(InterpretedFormula r, const FormulaPtr& source) {
  std::map<std::string, unsigned> names;
  collect_all_names(source, names);
  std::set<std::string> taken;
  for (const auto& [n, count] : names) taken.insert(n);

  TermSubst rename;
  auto pick = [&](const char* prefix, unsigned& counter) {
    for (;;) {
      std::string c = prefix + std::to_string(counter++);
      if (!taken.count(c)) return c;
    }
  };
  VarTuple witnesses, challenges;
  unsigned wi = 0, ci = 0;
  for (const auto& v : r.witnesses) {
    Var renamed{pick("w", wi), v.type};
    rename[v.name] = Term::var(renamed);
    witnesses.push_back(renamed);
  }
  for (const auto& v : r.challenges) {
    Var renamed{pick("c", ci), v.type};
    rename[v.name] = Term::var(renamed);
    challenges.push_back(renamed);
  }
  FormulaPtr matrix = substitute(r.matrix, rename);
  for (const auto& v : witnesses) taken.insert(v.name);
  for (const auto& v : challenges) taken.insert(v.name);
  matrix = rename_internal_binders(matrix, taken);
  return {std::move(witnesses), std::move(challenges), std::move(matrix)};
}

void reject_unsupported(const FormulaPtr& f, const char* what) {
  if (contains_kind(f, Formula::Kind::BForall))
    throw ValidationError(std::string(what) + ": no interpretation clause for bounded quantifiers");
}

FormulaPtr prepare_il(const FormulaPtr& f, const char* what) {
  require_logic(f, Logic::Intuitionistic, what);
  reject_unsupported(f, what);
  // Conditionals in inputs are macros; interpret their expansion.
  if (contains_kind(f, Formula::Kind::Cond)) return expand_cond(f);
  return f;
}

// ---------------------------------------------------------------------------
// Affine interpretation

InterpretedFormula al_rec(const FormulaPtr& f, const Registry& reg, NameGen& gen) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return {{}, {}, f};
    case Formula::Kind::Tensor: {
      auto a = al_rec(f->left(), reg, gen);
      auto b = al_rec(f->right(), reg, gen);
      return {tuple_concat(a.witnesses, b.witnesses), tuple_concat(a.challenges, b.challenges),
              Formula::tensor(a.matrix, b.matrix)};
    }
    case Formula::Kind::Plus: {
      auto a = al_rec(f->left(), reg, gen);
      auto b = al_rec(f->right(), reg, gen);
      Var sel = gen.fresh(SimpleType::boolean());
      VarTuple w = tuple_concat(a.witnesses, b.witnesses);
      w.push_back(sel);
      return {std::move(w), tuple_concat(a.challenges, b.challenges),
              Formula::cond(Term::var(sel), a.matrix, b.matrix)};
    }
    case Formula::Kind::Lolli: {
      auto a = al_rec(f->left(), reg, gen);
      auto b = al_rec(f->right(), reg, gen);
      auto fw = make_functions(gen, a.witnesses, b.witnesses);
      // Challenge-tracking functions g: arguments are the premise
      // witnesses followed by the conclusion challenges.
      auto gw = make_functions(gen, tuple_concat(a.witnesses, b.challenges), a.challenges);
      FormulaPtr premise = substitute(a.matrix, gw.replace_targets);
      FormulaPtr conclusion = substitute(b.matrix, fw.replace_targets);
      return {tuple_concat(fw.functions, gw.functions),
              tuple_concat(a.witnesses, b.challenges),
              Formula::lolli(premise, conclusion)};
    }
    case Formula::Kind::Forall: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = al_rec(substitute(f->body(), f->bound_var(), Term::var(inst)), reg, gen);
      auto fw = make_functions(gen, {inst}, a.witnesses);
      VarTuple c = a.challenges;
      c.push_back(inst);
      return {std::move(fw.functions), std::move(c),
              substitute(a.matrix, fw.replace_targets)};
    }
    case Formula::Kind::Exists: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = al_rec(substitute(f->body(), f->bound_var(), Term::var(inst)), reg, gen);
      VarTuple w = a.witnesses;
      w.push_back(inst);
      return {std::move(w), a.challenges, a.matrix};
    }
    case Formula::Kind::Bang: {
      BoundingSpec spec = reg.spec_for(f->modality());
      auto a = al_rec(f->body(), reg, gen);
      std::vector<TypePtr> bts = spec.bound_types(tuple_types(a.challenges));
      VarTuple bound_vars;
      for (const auto& t : bts) bound_vars.push_back(gen.fresh(t));
      FormulaPtr built = spec.build(a.challenges, var_terms(bound_vars), a.matrix);
      FormulaPtr matrix = Formula::bang(f->modality(), built);
      if (spec.truth())
        matrix = Formula::tensor(matrix, Formula::bang(f->modality(), f->body()));
      return {a.witnesses, std::move(bound_vars), std::move(matrix)};
    }
    default:
      throw ValidationError("interpret_al: unexpected connective");
  }
}

// ---------------------------------------------------------------------------
// Intuitionistic parametrized interpretation

InterpretedFormula il_rec(const FormulaPtr& f, const BoundingSpec& spec, NameGen& gen) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return {{}, {}, f};
    case Formula::Kind::And: {
      auto a = il_rec(f->left(), spec, gen);
      auto b = il_rec(f->right(), spec, gen);
      return {tuple_concat(a.witnesses, b.witnesses), tuple_concat(a.challenges, b.challenges),
              Formula::conj(a.matrix, b.matrix)};
    }
    case Formula::Kind::Or: {
      auto a = il_rec(f->left(), spec, gen);
      auto b = il_rec(f->right(), spec, gen);
      Var sel = gen.fresh(SimpleType::boolean());
      VarTuple w = tuple_concat(a.witnesses, b.witnesses);
      w.push_back(sel);
      if (!spec.truth()) {
        return {std::move(w), tuple_concat(a.challenges, b.challenges),
                Formula::cond(Term::var(sel), a.matrix, b.matrix)};
      }
      // Bounded branches with the source conjoined; the bound tuples
      // become the challenges.
      auto bound_branch = [&](const InterpretedFormula& side, const FormulaPtr& source,
                              VarTuple& out_bounds) {
        for (const auto& t : spec.bound_types(tuple_types(side.challenges)))
          out_bounds.push_back(gen.fresh(t));
        return Formula::conj(spec.build(side.challenges, var_terms(out_bounds), side.matrix),
                             source);
      };
      VarTuple bounds_a, bounds_b;
      FormulaPtr then_b = bound_branch(a, f->left(), bounds_a);
      FormulaPtr else_b = bound_branch(b, f->right(), bounds_b);
      return {std::move(w), tuple_concat(bounds_a, bounds_b),
              Formula::cond(Term::var(sel), then_b, else_b)};
    }
    case Formula::Kind::Implies: {
      auto a = il_rec(f->left(), spec, gen);
      auto b = il_rec(f->right(), spec, gen);
      auto fw = make_functions(gen, a.witnesses, b.witnesses);
      std::vector<TypePtr> bts = spec.bound_types(tuple_types(a.challenges));
      VarTuple g_args = tuple_concat(a.witnesses, b.challenges);
      VarTuple gs;
      std::vector<TermPtr> bound_terms;
      for (const auto& t : bts) {
        Var g = gen.fresh(curry(tuple_types(g_args), t));
        gs.push_back(g);
        bound_terms.push_back(Term::app_chain(Term::var(g), var_terms(g_args)));
      }
      FormulaPtr premise = spec.build(a.challenges, bound_terms, a.matrix);
      if (spec.truth()) premise = Formula::conj(premise, f->left());
      FormulaPtr conclusion = substitute(b.matrix, fw.replace_targets);
      return {tuple_concat(fw.functions, gs), tuple_concat(a.witnesses, b.challenges),
              Formula::implies(premise, conclusion)};
    }
    case Formula::Kind::Forall: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = il_rec(substitute(f->body(), f->bound_var(), Term::var(inst)), spec, gen);
      auto fw = make_functions(gen, {inst}, a.witnesses);
      VarTuple c = a.challenges;
      c.push_back(inst);
      return {std::move(fw.functions), std::move(c), substitute(a.matrix, fw.replace_targets)};
    }
    case Formula::Kind::Exists: {
      Var inst = gen.fresh(f->bound_var().type);
      FormulaPtr instantiated = substitute(f->body(), f->bound_var(), Term::var(inst));
      auto a = il_rec(instantiated, spec, gen);
      VarTuple w = a.witnesses;
      w.push_back(inst);
      if (!spec.truth()) return {std::move(w), a.challenges, a.matrix};
      std::vector<TypePtr> bts = spec.bound_types(tuple_types(a.challenges));
      VarTuple bound_vars;
      for (const auto& t : bts) bound_vars.push_back(gen.fresh(t));
      FormulaPtr matrix = Formula::conj(spec.build(a.challenges, var_terms(bound_vars), a.matrix),
                                        instantiated);
      return {std::move(w), std::move(bound_vars), std::move(matrix)};
    }
    default:
      throw ValidationError("interpret_il: unexpected connective");
  }
}

// ---------------------------------------------------------------------------
// Unary realizability (with and without truth) and their affine renderings

UnaryInterpreted mr_rec(const FormulaPtr& f, NameGen& gen) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return {{}, f};
    case Formula::Kind::And: {
      auto a = mr_rec(f->left(), gen);
      auto b = mr_rec(f->right(), gen);
      return {tuple_concat(a.witnesses, b.witnesses), Formula::conj(a.matrix, b.matrix)};
    }
    case Formula::Kind::Or: {
      auto a = mr_rec(f->left(), gen);
      auto b = mr_rec(f->right(), gen);
      Var sel = gen.fresh(SimpleType::boolean());
      VarTuple w = tuple_concat(a.witnesses, b.witnesses);
      w.push_back(sel);
      return {std::move(w), Formula::cond(Term::var(sel), a.matrix, b.matrix)};
    }
    case Formula::Kind::Implies: {
      auto a = mr_rec(f->left(), gen);
      auto b = mr_rec(f->right(), gen);
      auto fw = make_functions(gen, a.witnesses, b.witnesses);
      FormulaPtr body = Formula::implies(a.matrix, substitute(b.matrix, fw.replace_targets));
      return {std::move(fw.functions), forall_chain(a.witnesses, body)};
    }
    case Formula::Kind::Exists: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = mr_rec(substitute(f->body(), f->bound_var(), Term::var(inst)), gen);
      VarTuple w = a.witnesses;
      w.push_back(inst);
      return {std::move(w), a.matrix};
    }
    case Formula::Kind::Forall: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = mr_rec(substitute(f->body(), f->bound_var(), Term::var(inst)), gen);
      auto fw = make_functions(gen, {inst}, a.witnesses);
      return {std::move(fw.functions),
              Formula::forall(inst, substitute(a.matrix, fw.replace_targets))};
    }
    default:
      throw ValidationError("interpret_mr_unary: unexpected connective");
  }
}

UnaryInterpreted mrt_rec(const FormulaPtr& f, NameGen& gen) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return {{}, Formula::conj(f, f)};
    case Formula::Kind::And: {
      auto a = mrt_rec(f->left(), gen);
      auto b = mrt_rec(f->right(), gen);
      return {tuple_concat(a.witnesses, b.witnesses), Formula::conj(a.matrix, b.matrix)};
    }
    case Formula::Kind::Or: {
      auto a = mrt_rec(f->left(), gen);
      auto b = mrt_rec(f->right(), gen);
      Var sel = gen.fresh(SimpleType::boolean());
      VarTuple w = tuple_concat(a.witnesses, b.witnesses);
      w.push_back(sel);
      return {std::move(w), Formula::cond(Term::var(sel), a.matrix, b.matrix)};
    }
    case Formula::Kind::Implies: {
      auto a = mrt_rec(f->left(), gen);
      auto b = mrt_rec(f->right(), gen);
      auto fw = make_functions(gen, a.witnesses, b.witnesses);
      FormulaPtr body = Formula::implies(a.matrix, substitute(b.matrix, fw.replace_targets));
      return {std::move(fw.functions),
              Formula::conj(forall_chain(a.witnesses, body), f)};
    }
    case Formula::Kind::Exists: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = mrt_rec(substitute(f->body(), f->bound_var(), Term::var(inst)), gen);
      VarTuple w = a.witnesses;
      w.push_back(inst);
      return {std::move(w), a.matrix};
    }
    case Formula::Kind::Forall: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = mrt_rec(substitute(f->body(), f->bound_var(), Term::var(inst)), gen);
      auto fw = make_functions(gen, {inst}, a.witnesses);
      FormulaPtr quantified = Formula::forall(inst, substitute(a.matrix, fw.replace_targets));
      return {std::move(fw.functions), Formula::conj(quantified, f)};
    }
    default:
      throw ValidationError("interpret_mrt: unexpected connective");
  }
}

InterpretedFormula mr_affine_rec(const FormulaPtr& f, const Modality& label, bool truth,
                                 NameGen& gen) {
  auto rec = [&](const FormulaPtr& g) { return mr_affine_rec(g, label, truth, gen); };
  // Truth conjunct at bang positions: exactly the circ translation of the
  // source node (circ is bang-rooted at atoms, implications and
  // universals).
  auto truth_conjunct = [&](const FormulaPtr& source) {
    return translate(source, TranslationMode::Circ, label);
  };
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem: {
      FormulaPtr banged = Formula::bang(label, f);
      if (truth) banged = Formula::tensor(banged, truth_conjunct(f));
      return {{}, {}, banged};
    }
    case Formula::Kind::And: {
      auto a = rec(f->left());
      auto b = rec(f->right());
      return {tuple_concat(a.witnesses, b.witnesses), {}, Formula::tensor(a.matrix, b.matrix)};
    }
    case Formula::Kind::Or: {
      auto a = rec(f->left());
      auto b = rec(f->right());
      Var sel = gen.fresh(SimpleType::boolean());
      VarTuple w = tuple_concat(a.witnesses, b.witnesses);
      w.push_back(sel);
      return {std::move(w), {}, Formula::cond(Term::var(sel), a.matrix, b.matrix)};
    }
    case Formula::Kind::Implies: {
      auto a = rec(f->left());
      auto b = rec(f->right());
      auto fw = make_functions(gen, a.witnesses, b.witnesses);
      FormulaPtr body = Formula::lolli(a.matrix, substitute(b.matrix, fw.replace_targets));
      FormulaPtr banged = Formula::bang(label, forall_chain(a.witnesses, body));
      if (truth) banged = Formula::tensor(banged, truth_conjunct(f));
      return {std::move(fw.functions), {}, std::move(banged)};
    }
    case Formula::Kind::Exists: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = rec(substitute(f->body(), f->bound_var(), Term::var(inst)));
      VarTuple w = a.witnesses;
      w.push_back(inst);
      return {std::move(w), {}, a.matrix};
    }
    case Formula::Kind::Forall: {
      Var inst = gen.fresh(f->bound_var().type);
      auto a = rec(substitute(f->body(), f->bound_var(), Term::var(inst)));
      auto fw = make_functions(gen, {inst}, a.witnesses);
      FormulaPtr banged = Formula::bang(
          label, Formula::forall(inst, substitute(a.matrix, fw.replace_targets)));
      if (truth) banged = Formula::tensor(banged, truth_conjunct(f));
      return {std::move(fw.functions), {}, std::move(banged)};
    }
    default:
      throw ValidationError("affine realizability rendering: unexpected connective");
  }
}

// ---------------------------------------------------------------------------
// Witness/challenge types without matrices

struct TupleTypes {
  std::vector<TypePtr> w, c;
};

TupleTypes types_al(const FormulaPtr& f, const Registry& reg) {
  auto concat = [](std::vector<TypePtr> a, const std::vector<TypePtr>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return {};
    case Formula::Kind::Tensor: {
      auto a = types_al(f->left(), reg), b = types_al(f->right(), reg);
      return {concat(a.w, b.w), concat(a.c, b.c)};
    }
    case Formula::Kind::Plus: {
      auto a = types_al(f->left(), reg), b = types_al(f->right(), reg);
      auto w = concat(a.w, b.w);
      w.push_back(SimpleType::boolean());
      return {std::move(w), concat(a.c, b.c)};
    }
    case Formula::Kind::Lolli: {
      auto a = types_al(f->left(), reg), b = types_al(f->right(), reg);
      std::vector<TypePtr> w;
      for (const auto& t : b.w) w.push_back(curry(a.w, t));
      auto g_args = concat(a.w, b.c);
      for (const auto& t : a.c) w.push_back(curry(g_args, t));
      return {std::move(w), concat(a.w, b.c)};
    }
    case Formula::Kind::Forall: {
      auto a = types_al(f->body(), reg);
      const TypePtr& zt = f->bound_var().type;
      std::vector<TypePtr> w;
      for (const auto& t : a.w) w.push_back(SimpleType::arrow(zt, t));
      auto c = a.c;
      c.push_back(zt);
      return {std::move(w), std::move(c)};
    }
    case Formula::Kind::Exists: {
      auto a = types_al(f->body(), reg);
      auto w = a.w;
      w.push_back(f->bound_var().type);
      return {std::move(w), a.c};
    }
    case Formula::Kind::Bang: {
      BoundingSpec spec = reg.spec_for(f->modality());
      auto a = types_al(f->body(), reg);
      return {a.w, spec.bound_types(a.c)};
    }
    default:
      throw ValidationError("witness_types: unexpected connective");
  }
}

TupleTypes types_il(const FormulaPtr& f, const BoundingSpec& spec) {
  auto concat = [](std::vector<TypePtr> a, const std::vector<TypePtr>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::EqBool:
    case Formula::Kind::Mem:
      return {};
    case Formula::Kind::And: {
      auto a = types_il(f->left(), spec), b = types_il(f->right(), spec);
      return {concat(a.w, b.w), concat(a.c, b.c)};
    }
    case Formula::Kind::Or: {
      auto a = types_il(f->left(), spec), b = types_il(f->right(), spec);
      auto w = concat(a.w, b.w);
      w.push_back(SimpleType::boolean());
      if (!spec.truth()) return {std::move(w), concat(a.c, b.c)};
      return {std::move(w), concat(spec.bound_types(a.c), spec.bound_types(b.c))};
    }
    case Formula::Kind::Implies: {
      auto a = types_il(f->left(), spec), b = types_il(f->right(), spec);
      std::vector<TypePtr> w;
      for (const auto& t : b.w) w.push_back(curry(a.w, t));
      auto g_args = concat(a.w, b.c);
      for (const auto& t : spec.bound_types(a.c)) w.push_back(curry(g_args, t));
      return {std::move(w), concat(a.w, b.c)};
    }
    case Formula::Kind::Forall: {
      auto a = types_il(f->body(), spec);
      const TypePtr& zt = f->bound_var().type;
      std::vector<TypePtr> w;
      for (const auto& t : a.w) w.push_back(SimpleType::arrow(zt, t));
      auto c = a.c;
      c.push_back(zt);
      return {std::move(w), std::move(c)};
    }
    case Formula::Kind::Exists: {
      auto a = types_il(f->body(), spec);
      auto w = a.w;
      w.push_back(f->bound_var().type);
      if (!spec.truth()) return {std::move(w), a.c};
      return {std::move(w), spec.bound_types(a.c)};
    }
    default:
      throw ValidationError("witness_types: unexpected connective");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points

InterpretedFormula interpret_al(const FormulaPtr& f, const Registry& registry) {
  require_logic(f, Logic::Affine, "interpret_al");
  reject_unsupported(f, "interpret_al");
  if (contains_kind(f, Formula::Kind::Cond))
    throw ValidationError(
        "interpret_al: conditionals in inputs must be expanded first (expand_cond with a bang "
        "label)");
  NameGen gen;
  return finalize(al_rec(f, registry, gen), f);
}

InterpretedFormula interpret_il(const FormulaPtr& f, const BoundingSpec& spec) {
  FormulaPtr g = prepare_il(f, "interpret_il");
  NameGen gen;
  return finalize(il_rec(g, spec, gen), g);
}

UnaryInterpreted interpret_mr_unary(const FormulaPtr& f) {
  FormulaPtr g = prepare_il(f, "interpret_mr_unary");
  NameGen gen;
  auto r = mr_rec(g, gen);
  auto fin = finalize({r.witnesses, {}, r.matrix}, g);
  return {std::move(fin.witnesses), std::move(fin.matrix)};
}

InterpretedFormula interpret_qreal(const FormulaPtr& f) {
  return interpret_il(f, BoundingSpec::for_modality(Modality::kt()));
}

UnaryInterpreted interpret_mrt(const FormulaPtr& f) {
  FormulaPtr g = prepare_il(f, "interpret_mrt");
  NameGen gen;
  auto r = mrt_rec(g, gen);
  auto fin = finalize({r.witnesses, {}, r.matrix}, g);
  return {std::move(fin.witnesses), std::move(fin.matrix)};
}

InterpretedFormula interpret_mr_affine(const FormulaPtr& f, Modality label) {
  FormulaPtr g = prepare_il(f, "interpret_mr_affine");
  NameGen gen;
  return finalize(mr_affine_rec(g, label, false, gen), g);
}

InterpretedFormula interpret_mrt_affine(const FormulaPtr& f, Modality label) {
  FormulaPtr g = prepare_il(f, "interpret_mrt_affine");
  NameGen gen;
  return finalize(mr_affine_rec(g, label, true, gen), g);
}

std::pair<std::vector<TypePtr>, std::vector<TypePtr>> witness_types_al(const FormulaPtr& f,
                                                                       const Registry& registry) {
  require_logic(f, Logic::Affine, "witness_types_al");
  reject_unsupported(f, "witness_types_al");
  if (contains_kind(f, Formula::Kind::Cond))
    throw ValidationError("witness_types_al: conditionals in inputs must be expanded first");
  auto r = types_al(f, registry);
  return {std::move(r.w), std::move(r.c)};
}

std::pair<std::vector<TypePtr>, std::vector<TypePtr>> witness_types_il(const FormulaPtr& f,
                                                                       const BoundingSpec& spec) {
  FormulaPtr g = prepare_il(f, "witness_types_il");
  auto r = types_il(g, spec);
  return {std::move(r.w), std::move(r.c)};
}

}  // namespace fint
