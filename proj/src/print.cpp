#include "fint/print.hpp"

namespace fint {

namespace {

std::string term_str(const TermPtr& t, bool argument_position) {
  switch (t->kind()) {
    case Term::Kind::Var:
      return t->as_var().name;
    case Term::Kind::App: {
      std::string s = term_str(t->fn(), false) + " " + term_str(t->arg(), true);
      return argument_position ? "(" + s + ")" : s;
    }
    case Term::Kind::BoolConst:
      return t->bool_value() ? "true" : "false";
  }
  return "?";
}

// 0 quantifier/cond, 1 arrows, 2 binary, 3 bang, 4 atoms
int level_of(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
    case Formula::Kind::BForall:
    case Formula::Kind::Cond:
      return 0;
    case Formula::Kind::Implies:
    case Formula::Kind::Lolli:
      return 1;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Tensor:
    case Formula::Kind::Plus:
      return 2;
    case Formula::Kind::Bang:
      return 3;
    default:
      return 4;
  }
}

const char* binary_op(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And: return " & ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Tensor: return " * ";
    case Formula::Kind::Plus: return " + ";
    case Formula::Kind::Lolli: return " -o ";
    default: return " ? ";
  }
}

std::string print_at(const FormulaPtr& f, int min_level) {
  std::string s;
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      s = f->pred();
      if (!f->args().empty()) {
        s += "(";
        for (std::size_t i = 0; i < f->args().size(); ++i) {
          if (i) s += ", ";
          s += term_str(f->args()[i], false);
        }
        s += ")";
      }
      break;
    }
    case Formula::Kind::EqBool:
      s = term_str(f->eq_lhs(), true) + " = " + (f->eq_value() ? "true" : "false");
      break;
    case Formula::Kind::Mem:
      s = term_str(f->element(), true) + " in " + term_str(f->set_term(), true);
      break;
    case Formula::Kind::Implies:
    case Formula::Kind::Lolli:
      s = print_at(f->left(), 2) + binary_op(f->kind()) + print_at(f->right(), 1);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Tensor:
    case Formula::Kind::Plus:
      s = print_at(f->left(), 2) + binary_op(f->kind()) + print_at(f->right(), 3);
      break;
    case Formula::Kind::Bang:
      s = "!" + to_string(f->modality()) + " " + print_at(f->body(), 3);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      s = std::string(f->kind() == Formula::Kind::Forall ? "forall " : "exists ") +
          f->bound_var().name + ":" + to_string(f->bound_var().type) + ". " +
          print_at(f->body(), 0);
      break;
    case Formula::Kind::BForall:
      s = "forall " + f->bound_var().name + ":" + to_string(f->bound_var().type) + " in " +
          term_str(f->bound_term(), true) + ". " + print_at(f->body(), 0);
      break;
    case Formula::Kind::Cond:
      s = term_str(f->selector(), true) + " ? " + print_at(f->then_branch(), 1) + " : " +
          print_at(f->else_branch(), 0);
      break;
  }
  if (level_of(f) < min_level) return "(" + s + ")";
  return s;
}

}  // namespace

std::string print_term(const TermPtr& t) { return term_str(t, false); }

std::string print_formula(const FormulaPtr& f) { return print_at(f, 0); }

}  // namespace fint
