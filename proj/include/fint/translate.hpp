#pragma once

#include <utility>

#include "fint/formula.hpp"

namespace fint {

// Embeddings of intuitionistic logic into affine logic. The simplified
// star differs from the full one only at disjunction and existentials,
// where it drops the bangs.
enum class TranslationMode { StarFull, StarSimplified, Circ };

// Translates an intuitionistic formula into the affine fragment. Every
// introduced bang carries the given label. Conditionals and bounded
// quantifiers are mapped structurally (branches translated, no bang).
FormulaPtr translate(const FormulaPtr& f, TranslationMode mode,
                     Modality bang_label = Modality::g());

// Erases the affine structure: * to &, + to |, -o to ->, bangs dropped;
// quantifiers, atoms, conditionals and bounded quantifiers are unchanged.
FormulaPtr forget(const FormulaPtr& f);

// The two principles that make the simplified star admissible:
//   !A + !B -o !(A + B)      and      exists x !A -o !exists x A
// with all bangs labelled m; the second binds the caller-chosen variable.
std::pair<FormulaPtr, FormulaPtr> extra_principles(const FormulaPtr& a, const FormulaPtr& b,
                                                   const Modality& m,
                                                   const Var& v = Var{"x", SimpleType::nat()});

}  // namespace fint
