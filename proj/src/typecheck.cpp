#include "fint/typecheck.hpp"

#include <map>
#include <sstream>

namespace fint {

const Signature::Pred* Signature::find(const std::string& name) const {
  for (const auto& p : preds)
    if (p.name == name) return &p;
  return nullptr;
}

Signature default_signature() {
  Signature sig;
  sig.preds.push_back({"P", {}});
  sig.preds.push_back({"Q", {}});
  sig.preds.push_back({"R", {SimpleType::nat()}});
  return sig;
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed;
    for (char c : line) {
      if (c == '#') break;
      trimmed += c;
    }
    auto begin = trimmed.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = trimmed.find_last_not_of(" \t\r");
    trimmed = trimmed.substr(begin, end - begin + 1);

    auto colon = trimmed.find(':');
    if (colon == std::string::npos)
      throw ValidationError("signature line " + std::to_string(lineno) + ": expected 'name : N^k'");
    std::string name = trimmed.substr(0, colon);
    std::string arity = trimmed.substr(colon + 1);
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    name = strip(name);
    arity = strip(arity);
    if (name.empty() || arity.size() < 3 || arity[0] != 'N' || arity[1] != '^')
      throw ValidationError("signature line " + std::to_string(lineno) + ": expected 'name : N^k'");
    unsigned k = 0;
    for (std::size_t i = 2; i < arity.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(arity[i])))
        throw ValidationError("signature line " + std::to_string(lineno) + ": bad arity");
      k = k * 10 + static_cast<unsigned>(arity[i] - '0');
    }
    std::vector<TypePtr> args(k, SimpleType::nat());
    sig.preds.push_back({name, std::move(args)});
  }
  return sig;
}

std::string TypecheckResult::describe() const {
  std::string out;
  for (const auto& i : issues) {
    if (!out.empty()) out += "\n";
    out += "at " + i.path + ": " + i.message;
  }
  return out;
}

namespace {

struct Checker {
  const Signature& sig;
  std::vector<TypecheckIssue>& issues;
  // Variable typing context: binders push, free variables are recorded on
  // first use and must stay consistent.
  std::map<std::string, std::vector<TypePtr>> scope;
  std::map<std::string, TypePtr> free_seen;

  void fail(const std::string& path, const std::string& msg) { issues.push_back({path, msg}); }

  std::optional<TypePtr> term_check(const TermPtr& t, const std::string& path) {
    switch (t->kind()) {
      case Term::Kind::Var: {
        const Var& v = t->as_var();
        auto it = scope.find(v.name);
        if (it != scope.end() && !it->second.empty()) {
          if (!type_equal(it->second.back(), v.type)) {
            fail(path, "variable " + v.name + " used at type " + to_string(v.type) +
                           " but bound at type " + to_string(it->second.back()));
            return std::nullopt;
          }
        } else {
          auto [pos, inserted] = free_seen.emplace(v.name, v.type);
          if (!inserted && !type_equal(pos->second, v.type)) {
            fail(path, "free variable " + v.name + " used at both " + to_string(pos->second) +
                           " and " + to_string(v.type));
            return std::nullopt;
          }
        }
        return v.type;
      }
      case Term::Kind::App: {
        auto ft = term_check(t->fn(), path);
        auto at = term_check(t->arg(), path);
        if (!ft || !at) return std::nullopt;
        if ((*ft)->kind() != SimpleType::Kind::Arrow) {
          fail(path, "applied term of non-function type " + to_string(*ft));
          return std::nullopt;
        }
        if (!type_equal((*ft)->domain(), *at)) {
          fail(path, "argument type " + to_string(*at) + " does not match domain " +
                         to_string((*ft)->domain()));
          return std::nullopt;
        }
        return (*ft)->codomain();
      }
      case Term::Kind::BoolConst:
        return SimpleType::boolean();
    }
    return std::nullopt;
  }

  void push(const Var& v) { scope[v.name].push_back(v.type); }
  void pop(const Var& v) {
    auto& stack = scope[v.name];
    stack.pop_back();
    if (stack.empty()) scope.erase(v.name);
  }

  void check(const FormulaPtr& f, const std::string& path) {
    switch (f->kind()) {
      case Formula::Kind::Atom: {
        const auto* decl = sig.find(f->pred());
        if (!decl) {
          fail(path, "undeclared predicate " + f->pred());
        } else if (decl->arg_types.size() != f->args().size()) {
          fail(path, "predicate " + f->pred() + " expects " +
                         std::to_string(decl->arg_types.size()) + " arguments, got " +
                         std::to_string(f->args().size()));
        }
        for (std::size_t i = 0; i < f->args().size(); ++i) {
          auto at = term_check(f->args()[i], path + ".arg" + std::to_string(i));
          if (at && decl && i < decl->arg_types.size() && !type_equal(*at, decl->arg_types[i]))
            fail(path + ".arg" + std::to_string(i),
                 "argument of type " + to_string(*at) + " where " +
                     to_string(decl->arg_types[i]) + " is declared");
        }
        return;
      }
      case Formula::Kind::EqBool: {
        auto lt = term_check(f->eq_lhs(), path);
        if (lt && (*lt)->kind() != SimpleType::Kind::Bool)
          fail(path, "boolean equation over a term of type " + to_string(*lt));
        return;
      }
      case Formula::Kind::Mem: {
        auto et = term_check(f->element(), path);
        auto st = term_check(f->set_term(), path);
        if (st && (*st)->kind() != SimpleType::Kind::FinSet)
          fail(path, "membership in a term of non-set type " + to_string(*st));
        else if (st && et && !type_equal((*st)->element(), *et))
          fail(path, "element type " + to_string(*et) + " does not match set of " +
                         to_string((*st)->element()));
        return;
      }
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies:
      case Formula::Kind::Tensor:
      case Formula::Kind::Plus:
      case Formula::Kind::Lolli:
        check(f->left(), path + ".left");
        check(f->right(), path + ".right");
        return;
      case Formula::Kind::Bang:
        check(f->body(), path + ".body");
        return;
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        push(f->bound_var());
        check(f->body(), path + ".body");
        pop(f->bound_var());
        return;
      case Formula::Kind::BForall: {
        auto bt = term_check(f->bound_term(), path);
        if (bt) {
          const TypePtr& vt = f->bound_var().type;
          bool set_bound = (*bt)->kind() == SimpleType::Kind::FinSet &&
                           type_equal((*bt)->element(), vt);
          // Function-typed bounds range over indexed families (stein-style).
          bool fam_bound = (*bt)->kind() == SimpleType::Kind::Arrow &&
                           type_equal((*bt)->codomain(), vt);
          if (!set_bound && !fam_bound)
            fail(path, "bound of type " + to_string(*bt) +
                           " cannot range over variables of type " + to_string(vt));
        }
        push(f->bound_var());
        check(f->body(), path + ".body");
        pop(f->bound_var());
        return;
      }
      case Formula::Kind::Cond: {
        auto st = term_check(f->selector(), path);
        if (st && (*st)->kind() != SimpleType::Kind::Bool)
          fail(path, "conditional selector of non-boolean type " + to_string(*st));
        check(f->then_branch(), path + ".then");
        check(f->else_branch(), path + ".else");
        return;
      }
    }
  }
};

}  // namespace

TypecheckResult typecheck(const FormulaPtr& f, const Signature& sig) {
  TypecheckResult result;
  if (logic_of(f) == Logic::Mixed)
    result.issues.push_back({"root", "formula mixes intuitionistic and affine connectives"});
  Checker checker{sig, result.issues};
  checker.check(f, "root");
  return result;
}

}  // namespace fint
