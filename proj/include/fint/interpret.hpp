#pragma once

#include <utility>
#include <vector>

#include "fint/formula.hpp"
#include "fint/translate.hpp"

namespace fint {

// The value of an interpreted formula: a witness tuple, a challenge tuple
// and the matrix with both tuples free in it. Tuples are reported with
// canonical names (witnesses w0, w1, ..., challenges c0, c1, ...) chosen
// to avoid every name occurring in the source formula.
struct InterpretedFormula {
  VarTuple witnesses;
  VarTuple challenges;
  FormulaPtr matrix;
};

// Unary interpretations carry witnesses only.
struct UnaryInterpreted {
  VarTuple witnesses;
  FormulaPtr matrix;
};

// The pluggable bounding constructor {y}_a A. One canonical instance per
// modality:
//   k  : no bound tuple, build quantifies the challenges away
//   g  : bound tuple mirrors the challenge types, build substitutes
//   d  : finite-set bounds, build emits bounded quantifiers
//   kt / dt : as k / d but with the truth conjunct enabled
//   stein[M] : challenges of type level < M are quantified plainly, the
//              rest are bounded by families indexed by the pure type M
class BoundingSpec {
public:
  static BoundingSpec for_modality(const Modality& m);

  const Modality& modality() const { return modality_; }
  bool truth() const { return truth_; }

  std::vector<TypePtr> bound_types(const std::vector<TypePtr>& challenge_types) const;
  // challenges and bounds must align with bound_types(types(challenges)).
  FormulaPtr build(const VarTuple& challenges, const std::vector<TermPtr>& bounds,
                   const FormulaPtr& body) const;

private:
  BoundingSpec(Modality m, bool truth) : modality_(m), truth_(truth) {}
  Modality modality_;
  bool truth_;
};

// Maps bang labels to their bounding specs. A restricted registry rejects
// labels outside its set, which the diagram checks use to catch label
// leakage between translation and interpretation.
class Registry {
public:
  static Registry all();
  static Registry only(std::vector<Modality> allowed);

  BoundingSpec spec_for(const Modality& m) const;  // throws ValidationError

private:
  bool allow_all_ = false;
  std::vector<Modality> allowed_;
};

// Interpretation of affine formulas. Output bangs keep their source label;
// a bang under a truth spec gains the conjunct "* !m(body)" on the right.
InterpretedFormula interpret_al(const FormulaPtr& f, const Registry& registry);

// Parametrized interpretation of intuitionistic formulas. Under a truth
// spec, disjunction and existentials take the bounded clauses with the
// source formula conjoined, and the implication premise does the same.
InterpretedFormula interpret_il(const FormulaPtr& f, const BoundingSpec& spec);

// Kreisel-style unary realizability:
//   mr(P)          = P
//   mr(A & B)      = mr(A) & mr(B)                          witnesses x,v
//   mr(A | B)      = b ? mr(A) : mr(B)                      witnesses x,v,b
//   mr(A -> B)     = forall x (mr(A) -> mr(B)[f x / v])     witnesses f
//   mr(exists z A) = mr(A[a/z])                             witnesses x,a
//   mr(forall z A) = forall a mr(A[a/z])[f a / x]           witnesses f
UnaryInterpreted interpret_mr_unary(const FormulaPtr& f);

// q-realizability: relational realizability whose disjunction, existential
// and implication-premise positions close their challenges off and conjoin
// the source formula. Coincides with interpret_il under the kt spec.
InterpretedFormula interpret_qreal(const FormulaPtr& f);

// Realizability with truth, unary form. Derived clause by clause so that
// its circ image reproduces the affine interpretation of the circ
// translation under the kt bang (the checker validates this exhaustively):
//   mrt(P)          = P & P
//   mrt(A & B)      = mrt(A) & mrt(B)                                witnesses x,v
//   mrt(A | B)      = b ? mrt(A) : mrt(B)                            witnesses x,v,b
//   mrt(A -> B)     = forall x (mrt(A) -> mrt(B)[f x / v]) & (A -> B)   witnesses f
//   mrt(exists z A) = mrt(A[a/z])                                    witnesses x,a
//   mrt(forall z A) = forall a (mrt(A[a/z])[f a / x]) & forall z A   witnesses f
UnaryInterpreted interpret_mrt(const FormulaPtr& f);

// One-pass affine renderings of the two unary interpretations above: the
// direct clauses of |circ(f)| under the k (resp. kt) bang. Challenges are
// always empty. Erasing their bangs recovers the unary matrices; both
// facts are exercised by the diagram checks against the composed
// translate-then-interpret route.
InterpretedFormula interpret_mr_affine(const FormulaPtr& f, Modality label = Modality::k());
InterpretedFormula interpret_mrt_affine(const FormulaPtr& f, Modality label = Modality::kt());

// Witness and challenge types only, computed without building matrices.
std::pair<std::vector<TypePtr>, std::vector<TypePtr>> witness_types_al(const FormulaPtr& f,
                                                                       const Registry& registry);
std::pair<std::vector<TypePtr>, std::vector<TypePtr>> witness_types_il(const FormulaPtr& f,
                                                                       const BoundingSpec& spec);

}  // namespace fint
