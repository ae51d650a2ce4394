#include "fint/enumerate.hpp"

namespace fint {

namespace {

struct Gen {
  const Signature& sig;
  Logic logic;
  const std::vector<Modality>& bang_labels;
  VarTuple scope;

  bool atoms(const std::function<bool(const FormulaPtr&)>& emit) {
    for (const auto& p : sig.preds) {
      if (p.arg_types.empty()) {
        if (!emit(Formula::atom(p.name))) return false;
        continue;
      }
      // All argument tuples drawn from in-scope variables of matching type.
      std::vector<TermPtr> args(p.arg_types.size());
      std::function<bool(std::size_t)> fill = [&](std::size_t i) {
        if (i == p.arg_types.size()) return emit(Formula::atom(p.name, args));
        for (const auto& v : scope) {
          if (!type_equal(v.type, p.arg_types[i])) continue;
          args[i] = Term::var(v);
          if (!fill(i + 1)) return false;
        }
        return true;
      };
      if (!fill(0)) return false;
    }
    return true;
  }

  bool emit_all(unsigned depth, const std::function<bool(const FormulaPtr&)>& emit) {
    if (depth == 0) return true;
    if (!atoms(emit)) return false;
    if (depth == 1) return true;

    const bool affine = logic == Logic::Affine;
    using K = Formula::Kind;
    const K binary_kinds[3] = {affine ? K::Tensor : K::And, affine ? K::Plus : K::Or,
                               affine ? K::Lolli : K::Implies};
    for (K k : binary_kinds) {
      bool ok = emit_all(depth - 1, [&](const FormulaPtr& l) {
        return emit_all(depth - 1, [&](const FormulaPtr& r) {
          switch (k) {
            case K::And: return emit(Formula::conj(l, r));
            case K::Or: return emit(Formula::disj(l, r));
            case K::Implies: return emit(Formula::implies(l, r));
            case K::Tensor: return emit(Formula::tensor(l, r));
            case K::Plus: return emit(Formula::plus(l, r));
            default: return emit(Formula::lolli(l, r));
          }
        });
      });
      if (!ok) return false;
    }

    Var z{"z" + std::to_string(scope.size()), SimpleType::nat()};
    scope.push_back(z);
    bool ok = emit_all(depth - 1, [&](const FormulaPtr& body) {
      return emit(Formula::forall(z, body)) && emit(Formula::exists(z, body));
    });
    scope.pop_back();
    if (!ok) return false;

    if (affine) {
      for (const auto& m : bang_labels) {
        ok = emit_all(depth - 1, [&](const FormulaPtr& body) {
          return emit(Formula::bang(m, body));
        });
        if (!ok) return false;
      }
    }
    return true;
  }
};

}  // namespace

bool enumerate_formulas(const Signature& sig, unsigned depth, Logic logic,
                        const std::vector<Modality>& bang_labels,
                        const std::function<bool(const FormulaPtr&)>& yield) {
  Gen gen{sig, logic, bang_labels, {}};
  return gen.emit_all(depth, yield);
}

std::vector<FormulaPtr> enumerate_to_vector(const Signature& sig, unsigned depth, Logic logic,
                                            const std::vector<Modality>& bang_labels) {
  std::vector<FormulaPtr> out;
  enumerate_formulas(sig, depth, logic, bang_labels, [&](const FormulaPtr& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace fint
