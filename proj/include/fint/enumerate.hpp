#pragma once

#include <functional>
#include <vector>

#include "fint/typecheck.hpp"

namespace fint {

// Streams every closed formula of connective depth <= depth over the
// signature, deterministically and without duplicates. Atoms count as
// depth 1. Quantifiers bind N-typed variables z0, z1, ...; predicate
// arguments are drawn from the variables in scope, so non-nullary atoms
// only appear under quantifiers. Affine enumeration takes the list of
// bang labels to use (an empty list yields the bang-free fragment).
//
// The callback returns false to stop the stream early; the function
// returns false when it was stopped.
bool enumerate_formulas(const Signature& sig, unsigned depth, Logic logic,
                        const std::vector<Modality>& bang_labels,
                        const std::function<bool(const FormulaPtr&)>& yield);

std::vector<FormulaPtr> enumerate_to_vector(const Signature& sig, unsigned depth, Logic logic,
                                            const std::vector<Modality>& bang_labels = {});

}  // namespace fint
