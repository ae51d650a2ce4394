#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fint/check.hpp"
#include "fint/json_out.hpp"
#include "fint/ops.hpp"
#include "fint/parse.hpp"
#include "fint/print.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

fint::Modality parse_spec_token(const std::string& s) {
  using fint::Modality;
  if (s == "k") return Modality::k();
  if (s == "d") return Modality::d();
  if (s == "g") return Modality::g();
  if (s == "kt") return Modality::kt();
  if (s == "dt") return Modality::dt();
  if (s.rfind("stein:", 0) == 0) {
    std::string level = s.substr(6);
    if (level == "inf") return Modality::stein_inf();
    if (!level.empty() && level.find_first_not_of("0123456789") == std::string::npos)
      return Modality::stein(static_cast<unsigned>(std::stoul(level)));
  }
  throw fint::ValidationError("unknown spec '" + s + "' (use k|d|g|kt|dt|stein:M|stein:inf)");
}

fint::FormulaPtr parse_or_exit(const std::string& text) {
  try {
    return fint::parse_formula(text);
  } catch (const fint::ParseError& e) {
    std::cerr << "parse error at line " << e.span().line << ", column " << e.span().column << ": "
              << e.what() << "\n";
    std::exit(kExitUsage);
  }
}

void print_interpreted_text(const fint::InterpretedFormula& r, std::ostream& os) {
  os << "witnesses:";
  for (const auto& v : r.witnesses) os << " " << v.name << ":" << fint::to_string(v.type);
  os << "\nchallenges:";
  for (const auto& v : r.challenges) os << " " << v.name << ":" << fint::to_string(v.type);
  os << "\nmatrix: " << fint::print_formula(r.matrix) << "\n";
}

fint::Signature load_signature(const std::string& path) {
  if (path.empty()) return fint::default_signature();
  std::ifstream in(path);
  if (!in) throw fint::ValidationError("cannot open signature file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fint::parse_signature(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"functional interpretations of intuitionistic and affine logic"};
  app.require_subcommand(1);

  // interpret ----------------------------------------------------------
  auto* interpret = app.add_subcommand("interpret", "interpret a formula");
  std::string in_logic = "il", in_spec = "k", in_format = "text", in_formula;
  interpret->add_option("--logic", in_logic, "il or al")->check(CLI::IsMember({"il", "al"}));
  interpret->add_option("--spec", in_spec, "k|d|g|kt|dt|stein:M");
  interpret->add_option("--format", in_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  interpret->add_option("formula", in_formula, "formula to interpret")->required();

  // translate ----------------------------------------------------------
  auto* translate_cmd = app.add_subcommand("translate", "translate between the logics");
  std::string tr_via = "star", tr_label = "g", tr_formula;
  translate_cmd->add_option("--via", tr_via, "star|star-simple|circ|forget")
      ->check(CLI::IsMember({"star", "star-simple", "circ", "forget"}));
  translate_cmd->add_option("--label", tr_label, "bang label for introduced bangs");
  translate_cmd->add_option("formula", tr_formula, "formula to translate")->required();

  // check ----------------------------------------------------------------
  auto* check_cmd = app.add_subcommand("check", "run a commuting-diagram or order check");
  std::string ck_diagram, ck_sig, ck_out, ck_format = "text";
  unsigned ck_depth = 3;
  check_cmd
      ->add_option("--diagram", ck_diagram, "mr|rreal|dial|mrt|qreal|pure|stein|bang-order")
      ->required()
      ->check(CLI::IsMember({"mr", "rreal", "dial", "mrt", "qreal", "pure", "stein",
                             "bang-order"}));
  check_cmd->add_option("--depth", ck_depth, "maximum connective depth (default 3)");
  check_cmd->add_option("--sig", ck_sig, "signature file (name : N^k per line)");
  check_cmd->add_option("--out", ck_out, "write the report to this path");
  check_cmd->add_option("--format", ck_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // types ----------------------------------------------------------------
  auto* types_cmd = app.add_subcommand("types", "witness and challenge types of a formula");
  std::string ty_spec = "k", ty_formula, ty_format = "text";
  types_cmd->add_option("--spec", ty_spec, "k|d|g|kt|dt|stein:M");
  types_cmd->add_option("--format", ty_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  types_cmd->add_option("formula", ty_formula, "formula to analyse")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*interpret) {
      fint::Modality spec = parse_spec_token(in_spec);
      fint::FormulaPtr f = parse_or_exit(in_formula);
      fint::InterpretedFormula r;
      if (in_logic == "al") {
        r = fint::interpret_al(f, fint::Registry::all());
      } else {
        r = fint::interpret_il(f, fint::BoundingSpec::for_modality(spec));
      }
      if (in_format == "json")
        std::cout << fint::emit_json(r) << "\n";
      else
        print_interpreted_text(r, std::cout);
      return kExitOk;
    }

    if (*translate_cmd) {
      fint::FormulaPtr f = parse_or_exit(tr_formula);
      fint::FormulaPtr out;
      if (tr_via == "forget") {
        out = fint::forget(f);
      } else {
        fint::Modality label = parse_spec_token(tr_label);
        fint::TranslationMode mode = tr_via == "star"          ? fint::TranslationMode::StarFull
                                     : tr_via == "star-simple" ? fint::TranslationMode::StarSimplified
                                                               : fint::TranslationMode::Circ;
        out = fint::translate(f, mode, label);
      }
      std::cout << fint::print_formula(out) << "\n";
      return kExitOk;
    }

    if (*check_cmd) {
      fint::Signature sig = load_signature(ck_sig);
      fint::CheckReport report;
      if (ck_diagram == "pure") {
        report = fint::run_pure_coincidence(sig, ck_depth);
      } else if (ck_diagram == "stein") {
        report = fint::run_stein_boundaries(sig, ck_depth);
      } else if (ck_diagram == "bang-order") {
        report = fint::run_bang_order();
      } else {
        fint::DiagramId d = ck_diagram == "mr"      ? fint::DiagramId::MR
                            : ck_diagram == "rreal" ? fint::DiagramId::RREAL
                            : ck_diagram == "dial"  ? fint::DiagramId::DIAL
                            : ck_diagram == "mrt"   ? fint::DiagramId::MRT
                                                    : fint::DiagramId::QREAL;
        report = fint::run_diagram(d, sig, ck_depth);
      }
      std::string rendered =
          ck_format == "json" ? fint::emit_json(report) + "\n" : fint::report_lines(report);
      if (!ck_out.empty()) {
        std::ofstream out(ck_out);
        if (!out) throw fint::ValidationError("cannot write report to " + ck_out);
        out << rendered;
      } else {
        std::cout << rendered;
      }
      return report.all_passed() ? kExitOk : kExitCheckFailed;
    }

    if (*types_cmd) {
      fint::Modality spec = parse_spec_token(ty_spec);
      fint::FormulaPtr f = parse_or_exit(ty_formula);
      std::pair<std::vector<fint::TypePtr>, std::vector<fint::TypePtr>> wc;
      if (fint::logic_of(f) == fint::Logic::Affine)
        wc = fint::witness_types_al(f, fint::Registry::all());
      else
        wc = fint::witness_types_il(f, fint::BoundingSpec::for_modality(spec));
      if (ty_format == "json") {
        std::string out = "{\"witnesses\":[";
        for (std::size_t i = 0; i < wc.first.size(); ++i)
          out += (i ? "," : "") + ("\"" + fint::to_string(wc.first[i]) + "\"");
        out += "],\"challenges\":[";
        for (std::size_t i = 0; i < wc.second.size(); ++i)
          out += (i ? "," : "") + ("\"" + fint::to_string(wc.second[i]) + "\"");
        out += "]}";
        std::cout << out << "\n";
      } else {
        std::cout << "witnesses:";
        for (const auto& t : wc.first) std::cout << " " << fint::to_string(t);
        std::cout << "\nchallenges:";
        for (const auto& t : wc.second) std::cout << " " << fint::to_string(t);
        std::cout << "\n";
      }
      return kExitOk;
    }
  } catch (const fint::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fint::TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fint::ParseError& e) {
    std::cerr << "parse error at line " << e.span().line << ", column " << e.span().column << ": "
              << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
