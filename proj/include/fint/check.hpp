#pragma once

#include <optional>
#include <string>

#include "fint/enumerate.hpp"
#include "fint/interpret.hpp"

namespace fint {

// The five factorisation diagrams. Each fixes a translation, a bounding
// spec and a comparison recipe; commutation is syntactic equality of
// (witness types, challenge types, alpha-normalized matrix).
enum class DiagramId { MR, RREAL, DIAL, MRT, QREAL };

const char* diagram_name(DiagramId d);

struct CheckFailure {
  std::string formula;
  std::string left;
  std::string right;
};

struct CheckReport {
  std::string check;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::optional<CheckFailure> first_failure;

  bool all_passed() const { return passed == total; }
};

struct DiagramOutcome {
  bool pass = false;
  InterpretedFormula left;
  InterpretedFormula right;
};

std::string render_interpreted(const InterpretedFormula& r);

// Runs one diagram on one intuitionistic formula. Failures are data, not
// errors.
DiagramOutcome check_commutation(DiagramId d, const FormulaPtr& f);

// All bounding specs coincide on formulas without the connective that
// consults them: implication-free intuitionistic formulas and bang-free
// affine formulas. Throws ValidationError when the input contains the
// excluded connective.
DiagramOutcome check_pure_coincidence(const FormulaPtr& f);

// true when a witness for the a-labelled bang also witnesses the
// b-labelled one (a sits at or above b in the modality order). Only the
// five plain labels participate; stein labels are rejected.
bool bang_leq(const Modality& a, const Modality& b);

// Corpus sweeps. Reports carry the first counterexample in enumeration
// order when anything fails.
CheckReport run_diagram(DiagramId d, const Signature& sig, unsigned depth);
CheckReport run_pure_coincidence(const Signature& sig, unsigned depth);
CheckReport run_stein_boundaries(const Signature& sig, unsigned depth);
CheckReport run_bang_order();

// Line-oriented rendering: a summary line plus failure details if any.
std::string report_lines(const CheckReport& r);

}  // namespace fint
