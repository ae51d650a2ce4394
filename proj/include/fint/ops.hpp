#pragma once

#include <map>
#include <optional>
#include <string>

#include "fint/formula.hpp"

namespace fint {

using TermSubst = std::map<std::string, TermPtr>;

// Simultaneous capture-avoiding substitution of terms for free variables.
// Binders that would capture a free variable of a replacement term are
// renamed (name', name'', ...).
TermPtr substitute_term(const TermPtr& t, const TermSubst& subst);
FormulaPtr substitute(const FormulaPtr& f, const TermSubst& subst);

// Single-variable form; throws TypeError when t's type differs from v's.
FormulaPtr substitute(const FormulaPtr& f, const Var& v, const TermPtr& t);

// Deterministic canonical renaming of bound variables to v0, v1, ... in
// depth-first left-to-right order (skipping names that occur free). Free
// variables are never touched; alpha-equivalent inputs yield equal trees.
FormulaPtr alpha_normalize(const FormulaPtr& f);

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

// Replaces every conditional:
//   intuitionistic   sel ? A : B  ~>  (sel = true -> A) & (sel = false -> B)
//   affine           sel ? A : B  ~>  (!m (sel = true) -o A) * (!m (sel = false) -o B)
// The affine expansion requires the bang label m; passing a label for an
// intuitionistic tree (or none for an affine tree) is an error.
FormulaPtr expand_cond(const FormulaPtr& f, std::optional<Modality> bang_label = {});

// Rewrites the label of every bang in the tree.
FormulaPtr relabel_bangs(const FormulaPtr& f, const Modality& m);

}  // namespace fint
