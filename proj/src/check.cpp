#include "fint/check.hpp"

#include <array>
#include <functional>

#include "fint/ops.hpp"
#include "fint/print.hpp"
#include "fint/translate.hpp"

namespace fint {

const char* diagram_name(DiagramId d) {
  switch (d) {
    case DiagramId::MR: return "mr";
    case DiagramId::RREAL: return "rreal";
    case DiagramId::DIAL: return "dial";
    case DiagramId::MRT: return "mrt";
    case DiagramId::QREAL: return "qreal";
  }
  return "?";
}

std::string render_interpreted(const InterpretedFormula& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (i) s += ", ";
    s += r.witnesses[i].name + ":" + to_string(r.witnesses[i].type);
  }
  s += " | ";
  for (std::size_t i = 0; i < r.challenges.size(); ++i) {
    if (i) s += ", ";
    s += r.challenges[i].name + ":" + to_string(r.challenges[i].type);
  }
  s += "] " + print_formula(r.matrix);
  return s;
}

namespace {

bool tuples_equal(const InterpretedFormula& a, const InterpretedFormula& b) {
  if (a.witnesses.size() != b.witnesses.size() || a.challenges.size() != b.challenges.size())
    return false;
  for (std::size_t i = 0; i < a.witnesses.size(); ++i)
    if (!var_equal(a.witnesses[i], b.witnesses[i])) return false;
  for (std::size_t i = 0; i < a.challenges.size(); ++i)
    if (!var_equal(a.challenges[i], b.challenges[i])) return false;
  return true;
}

bool interpreted_equal(const InterpretedFormula& a, const InterpretedFormula& b) {
  return tuples_equal(a, b) && alpha_equal(a.matrix, b.matrix);
}

bool types_match(const VarTuple& vars, const std::vector<TypePtr>& types) {
  if (vars.size() != types.size()) return false;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!type_equal(vars[i].type, types[i])) return false;
  return true;
}

}  // namespace

DiagramOutcome check_commutation(DiagramId d, const FormulaPtr& f) {
  require_logic(f, Logic::Intuitionistic, "check_commutation");
  switch (d) {
    case DiagramId::MR:
    case DiagramId::MRT: {
      const bool truth = d == DiagramId::MRT;
      const Modality label = truth ? Modality::kt() : Modality::k();
      InterpretedFormula composed =
          interpret_al(translate(f, TranslationMode::Circ, label), Registry::only({label}));
      InterpretedFormula direct =
          truth ? interpret_mrt_affine(f, label) : interpret_mr_affine(f, label);
      bool pass = interpreted_equal(composed, direct);
      // The direct route must also present the unary interpretation: its
      // bang erasure is the unary matrix over the same witness tuple.
      UnaryInterpreted unary = truth ? interpret_mrt(f) : interpret_mr_unary(f);
      pass = pass && types_match(unary.witnesses, tuple_types(direct.witnesses)) &&
             alpha_equal(forget(direct.matrix), unary.matrix);
      return {pass, composed, direct};
    }
    case DiagramId::RREAL:
    case DiagramId::DIAL: {
      const Modality label = d == DiagramId::RREAL ? Modality::k() : Modality::g();
      InterpretedFormula left = interpret_al(
          translate(f, TranslationMode::StarSimplified, label), Registry::only({label}));
      InterpretedFormula il = interpret_il(f, BoundingSpec::for_modality(label));
      InterpretedFormula right{il.witnesses, il.challenges,
                               translate(il.matrix, TranslationMode::StarSimplified, label)};
      return {interpreted_equal(left, right), left, right};
    }
    case DiagramId::QREAL: {
      const Modality label = Modality::kt();
      InterpretedFormula al =
          interpret_al(translate(f, TranslationMode::StarFull, label), Registry::only({label}));
      InterpretedFormula left{al.witnesses, al.challenges, forget(al.matrix)};
      InterpretedFormula right = interpret_qreal(f);
      return {interpreted_equal(left, right), left, right};
    }
  }
  throw ValidationError("unknown diagram");
}

DiagramOutcome check_pure_coincidence(const FormulaPtr& f) {
  Logic l = logic_of(f);
  if (l == Logic::Mixed) throw ValidationError("check_pure_coincidence: mixed logics");
  if (l == Logic::Affine) {
    if (contains_kind(f, Formula::Kind::Bang))
      throw ValidationError("check_pure_coincidence: affine input must be bang-free");
    // Bang-free affine interpretation never consults the registry; compare
    // runs under each restricted registry anyway.
    InterpretedFormula first = interpret_al(f, Registry::only({Modality::k()}));
    for (const Modality& m : {Modality::d(), Modality::g(), Modality::stein(0),
                              Modality::stein(2), Modality::stein_inf()}) {
      InterpretedFormula other = interpret_al(f, Registry::only({m}));
      if (!interpreted_equal(first, other)) return {false, first, other};
    }
    return {true, first, first};
  }
  if (contains_kind(f, Formula::Kind::Implies))
    throw ValidationError("check_pure_coincidence: intuitionistic input must be implication-free");
  InterpretedFormula first = interpret_il(f, BoundingSpec::for_modality(Modality::k()));
  for (const Modality& m : {Modality::d(), Modality::g(), Modality::stein(0), Modality::stein(2),
                            Modality::stein_inf()}) {
    InterpretedFormula other = interpret_il(f, BoundingSpec::for_modality(m));
    if (!interpreted_equal(first, other)) return {false, first, other};
  }
  return {true, first, first};
}

namespace {

int bang_index(const Modality& m) {
  switch (m.kind) {
    case Modality::Kind::G: return 0;
    case Modality::Kind::D: return 1;
    case Modality::Kind::K: return 2;
    case Modality::Kind::DT: return 3;
    case Modality::Kind::KT: return 4;
    case Modality::Kind::Stein:
      throw ValidationError("bang_leq: stein modalities are not ordered");
  }
  throw ValidationError("bang_leq: unknown modality");
}

// Reflexive-transitive closure of the cover edges kt>k, kt>dt, k>d,
// dt>d, d>g, as a geq matrix over (g, d, k, dt, kt).
std::array<std::array<bool, 5>, 5> bang_geq_closure() {
  std::array<std::array<bool, 5>, 5> geq{};
  for (int i = 0; i < 5; ++i) geq[i][i] = true;
  auto edge = [&](const Modality& a, const Modality& b) {
    geq[bang_index(a)][bang_index(b)] = true;
  };
  edge(Modality::kt(), Modality::k());
  edge(Modality::kt(), Modality::dt());
  edge(Modality::k(), Modality::d());
  edge(Modality::dt(), Modality::d());
  edge(Modality::d(), Modality::g());
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (geq[i][k] && geq[k][j]) geq[i][j] = true;
  return geq;
}

}  // namespace

bool bang_leq(const Modality& a, const Modality& b) {
  static const auto geq = bang_geq_closure();
  return geq[bang_index(a)][bang_index(b)];
}

namespace {

struct ReportBuilder {
  CheckReport report;

  void record(bool pass, const std::function<CheckFailure()>& failure) {
    ++report.total;
    if (pass) {
      ++report.passed;
    } else if (!report.first_failure) {
      report.first_failure = failure();
    }
  }
};

CheckFailure diagram_failure(const FormulaPtr& f, const DiagramOutcome& o) {
  return {print_formula(f), render_interpreted(o.left), render_interpreted(o.right)};
}

}  // namespace

CheckReport run_diagram(DiagramId d, const Signature& sig, unsigned depth) {
  ReportBuilder b;
  b.report.check = diagram_name(d);
  enumerate_formulas(sig, depth, Logic::Intuitionistic, {}, [&](const FormulaPtr& f) {
    DiagramOutcome o = check_commutation(d, f);
    b.record(o.pass, [&] { return diagram_failure(f, o); });
    return true;
  });
  return b.report;
}

CheckReport run_pure_coincidence(const Signature& sig, unsigned depth) {
  ReportBuilder b;
  b.report.check = "pure";
  enumerate_formulas(sig, depth, Logic::Intuitionistic, {}, [&](const FormulaPtr& f) {
    if (contains_kind(f, Formula::Kind::Implies)) return true;
    DiagramOutcome o = check_pure_coincidence(f);
    b.record(o.pass, [&] { return diagram_failure(f, o); });
    return true;
  });
  enumerate_formulas(sig, depth, Logic::Affine, {}, [&](const FormulaPtr& f) {
    DiagramOutcome o = check_pure_coincidence(f);
    b.record(o.pass, [&] { return diagram_failure(f, o); });
    return true;
  });
  return b.report;
}

CheckReport run_stein_boundaries(const Signature& sig, unsigned depth) {
  ReportBuilder b;
  b.report.check = "stein";
  const BoundingSpec inf_spec = BoundingSpec::for_modality(Modality::stein_inf());
  const BoundingSpec k_spec = BoundingSpec::for_modality(Modality::k());
  const BoundingSpec zero_spec = BoundingSpec::for_modality(Modality::stein(0));

  // stein[inf] and k coincide on intuitionistic formulas, matrices included.
  enumerate_formulas(sig, depth, Logic::Intuitionistic, {}, [&](const FormulaPtr& f) {
    InterpretedFormula a = interpret_il(f, inf_spec);
    InterpretedFormula k = interpret_il(f, k_spec);
    b.record(interpreted_equal(a, k),
             [&] { return CheckFailure{print_formula(f), render_interpreted(a),
                                       render_interpreted(k)}; });
    return true;
  });

  // On affine formulas the outputs differ only in the label the bang
  // re-emits; compare after relabelling both to k.
  enumerate_formulas(sig, depth, Logic::Affine, {Modality::k()}, [&](const FormulaPtr& f) {
    FormulaPtr as_inf = relabel_bangs(f, Modality::stein_inf());
    InterpretedFormula a = interpret_al(as_inf, Registry::only({Modality::stein_inf()}));
    InterpretedFormula k = interpret_al(f, Registry::only({Modality::k()}));
    InterpretedFormula a_relabelled{a.witnesses, a.challenges,
                                    relabel_bangs(a.matrix, Modality::k())};
    b.record(interpreted_equal(a_relabelled, k),
             [&] { return CheckFailure{print_formula(f), render_interpreted(a),
                                       render_interpreted(k)}; });

    // Every bound tuple stein[0] assigns is a family N -> rho.
    std::function<bool(const FormulaPtr&)> scan = [&](const FormulaPtr& g) -> bool {
      bool ok = true;
      if (g->kind() == Formula::Kind::Bang) {
        auto [w, c] = witness_types_al(g->body(), Registry::all());
        for (const auto& t : zero_spec.bound_types(c)) {
          if (t->kind() != SimpleType::Kind::Arrow ||
              t->domain()->kind() != SimpleType::Kind::Nat)
            ok = false;
        }
      }
      switch (g->kind()) {
        case Formula::Kind::Tensor:
        case Formula::Kind::Plus:
        case Formula::Kind::Lolli:
          return scan(g->left()) && scan(g->right()) && ok;
        case Formula::Kind::Bang:
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
          return scan(g->body()) && ok;
        default:
          return ok;
      }
    };
    bool zero_ok = scan(relabel_bangs(f, Modality::stein(0)));
    b.record(zero_ok, [&] {
      return CheckFailure{print_formula(f), "stein[0] bound types", "expected N -> rho shapes"};
    });
    return true;
  });
  return b.report;
}

CheckReport run_bang_order() {
  ReportBuilder b;
  b.report.check = "bang-order";
  const Modality mods[5] = {Modality::g(), Modality::d(), Modality::k(), Modality::dt(),
                            Modality::kt()};
  // The expected 25-entry table, frozen from the modality ordering: each
  // entry lists the labels it dominates.
  auto expected = [](const Modality& a, const Modality& b) {
    auto rank = [](const Modality& m) { return to_string(m); };
    const std::string sa = rank(a), sb = rank(b);
    if (sa == sb) return true;
    if (sa == "kt") return sb == "k" || sb == "dt" || sb == "d" || sb == "g";
    if (sa == "k") return sb == "d" || sb == "g";
    if (sa == "dt") return sb == "d" || sb == "g";
    if (sa == "d") return sb == "g";
    return false;  // g dominates nothing else
  };
  for (const auto& a : mods)
    for (const auto& c : mods) {
      bool got = bang_leq(a, c);
      bool want = expected(a, c);
      b.record(got == want, [&] {
        return CheckFailure{to_string(a) + " >= " + to_string(c), got ? "true" : "false",
                            want ? "true" : "false"};
      });
    }
  // Partial-order laws by exhaustion.
  for (const auto& a : mods)
    b.record(bang_leq(a, a), [&] { return CheckFailure{to_string(a), "not reflexive", ""}; });
  for (const auto& a : mods)
    for (const auto& c : mods) {
      bool antisym = !(bang_leq(a, c) && bang_leq(c, a)) || a == c;
      b.record(antisym, [&] {
        return CheckFailure{to_string(a) + " vs " + to_string(c), "antisymmetry violated", ""};
      });
    }
  for (const auto& a : mods)
    for (const auto& c : mods)
      for (const auto& e : mods) {
        bool trans = !(bang_leq(a, c) && bang_leq(c, e)) || bang_leq(a, e);
        b.record(trans, [&] {
          return CheckFailure{to_string(a) + " >= " + to_string(c) + " >= " + to_string(e),
                              "transitivity violated", ""};
        });
      }
  return b.report;
}

std::string report_lines(const CheckReport& r) {
  std::string out = r.check + ": passed " + std::to_string(r.passed) + "/" +
                    std::to_string(r.total) + (r.all_passed() ? " [PASS]" : " [FAIL]") + "\n";
  if (r.first_failure) {
    out += "first failure: " + r.first_failure->formula + "\n";
    out += "  left:  " + r.first_failure->left + "\n";
    out += "  right: " + r.first_failure->right + "\n";
  }
  return out;
}

}  // namespace fint
