#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fint/term.hpp"

namespace fint {

// Bang labels. Distinct labels are distinct modalities even when their
// interpretation clauses coincide (stein[inf] is not k).
struct Modality {
  enum class Kind { K, D, G, KT, DT, Stein };

  Kind kind = Kind::K;
  // Stein only; nullopt means the infinite cutoff.
  std::optional<unsigned> stein_level{};

  static Modality k() { return {Kind::K, {}}; }
  static Modality d() { return {Kind::D, {}}; }
  static Modality g() { return {Kind::G, {}}; }
  static Modality kt() { return {Kind::KT, {}}; }
  static Modality dt() { return {Kind::DT, {}}; }
  static Modality stein(unsigned level) { return {Kind::Stein, level}; }
  static Modality stein_inf() { return {Kind::Stein, std::nullopt}; }
};

bool operator==(const Modality& a, const Modality& b);
bool operator!=(const Modality& a, const Modality& b);
bool operator<(const Modality& a, const Modality& b);
std::string to_string(const Modality& m);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree covering both logics. Whether a tree belongs to
// the intuitionistic or the affine fragment is derived, not stored;
// validation rejects mixed trees (see logic_of / fits_logic).
class Formula {
public:
  enum class Kind {
    Atom,     // predicate applied to terms
    EqBool,   // term = true | term = false
    Mem,      // term in term (finite-set membership)
    And, Or, Implies,      // intuitionistic connectives
    Tensor, Plus, Lolli,   // affine connectives
    Bang,     // labelled modality
    Forall, Exists,        // shared quantifiers
    BForall,  // bounded universal: forall x in s . body
    Cond      // boolean conditional: sel ? then : else
  };

  static FormulaPtr atom(std::string pred, std::vector<TermPtr> args = {});
  static FormulaPtr eq_bool(TermPtr lhs, bool rhs);
  static FormulaPtr mem(TermPtr element, TermPtr set);
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr implies(FormulaPtr l, FormulaPtr r);
  static FormulaPtr tensor(FormulaPtr l, FormulaPtr r);
  static FormulaPtr plus(FormulaPtr l, FormulaPtr r);
  static FormulaPtr lolli(FormulaPtr l, FormulaPtr r);
  static FormulaPtr bang(Modality m, FormulaPtr body);
  static FormulaPtr forall(Var v, FormulaPtr body);
  static FormulaPtr exists(Var v, FormulaPtr body);
  static FormulaPtr bforall(Var v, TermPtr bound, FormulaPtr body);
  static FormulaPtr cond(TermPtr selector, FormulaPtr then_branch, FormulaPtr else_branch);

  Kind kind() const { return kind_; }

  const std::string& pred() const { return pred_; }
  const std::vector<TermPtr>& args() const { return args_; }
  const TermPtr& eq_lhs() const { return term_a_; }
  bool eq_value() const { return eq_value_; }
  const TermPtr& element() const { return term_a_; }
  const TermPtr& set_term() const { return term_b_; }
  const FormulaPtr& left() const { return sub_a_; }
  const FormulaPtr& right() const { return sub_b_; }
  const Modality& modality() const { return modality_; }
  const FormulaPtr& body() const { return sub_a_; }
  const Var& bound_var() const { return var_; }
  const TermPtr& bound_term() const { return term_a_; }
  const TermPtr& selector() const { return term_a_; }
  const FormulaPtr& then_branch() const { return sub_a_; }
  const FormulaPtr& else_branch() const { return sub_b_; }

  bool is_binary() const {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Implies ||
           kind_ == Kind::Tensor || kind_ == Kind::Plus || kind_ == Kind::Lolli;
  }
  bool is_quantifier() const { return kind_ == Kind::Forall || kind_ == Kind::Exists; }

private:
  Formula() = default;

  Kind kind_ = Kind::Atom;
  std::string pred_;
  std::vector<TermPtr> args_;
  TermPtr term_a_;
  TermPtr term_b_;
  FormulaPtr sub_a_;
  FormulaPtr sub_b_;
  Var var_;
  Modality modality_;
  bool eq_value_ = false;
};

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// Free variables of the formula, name -> type (binders shadow).
std::map<std::string, TypePtr> free_vars(const FormulaPtr& f);

// Every variable name occurring in the formula, bound or free.
void collect_all_names(const FormulaPtr& f, std::map<std::string, unsigned>& out);

enum class Logic { Intuitionistic, Affine, Neutral, Mixed };

// Neutral trees (atoms, quantifiers, Cond, BForall only) fit either logic.
Logic logic_of(const FormulaPtr& f);
bool fits_logic(const FormulaPtr& f, Logic target);

// Throws ValidationError unless f fits the target logic.
void require_logic(const FormulaPtr& f, Logic target, const std::string& context);

bool contains_kind(const FormulaPtr& f, Formula::Kind k);

}  // namespace fint
