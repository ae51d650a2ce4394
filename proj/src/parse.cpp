#include "fint/parse.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <vector>

namespace fint {

namespace {

enum class Tok {
  Ident, Nat, LParen, RParen, LBracket, RBracket, Comma, Dot, Colon,
  Question, Bang, Amp, Pipe, Star, Plus, Arrow, Lolli, Eq, End
};

struct Token {
  Tok kind;
  std::string text;
  unsigned number = 0;
  SourceSpan span;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  unsigned line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    SourceSpan span{i, i + 1, line, col};
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), 0, span});
      advance(1);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
              text[j] == '\''))
        ++j;
      Token t{Tok::Ident, text.substr(i, j - i), 0, {i, j, line, col}};
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      unsigned value = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        value = value * 10 + static_cast<unsigned>(text[j] - '0');
        ++j;
      }
      out.push_back({Tok::Nat, text.substr(i, j - i), value, {i, j, line, col}});
      advance(j - i);
      continue;
    }
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '[': single(Tok::LBracket); continue;
      case ']': single(Tok::RBracket); continue;
      case ',': single(Tok::Comma); continue;
      case '.': single(Tok::Dot); continue;
      case ':': single(Tok::Colon); continue;
      case '?': single(Tok::Question); continue;
      case '!': single(Tok::Bang); continue;
      case '&': single(Tok::Amp); continue;
      case '|': single(Tok::Pipe); continue;
      case '*': single(Tok::Star); continue;
      case '+': single(Tok::Plus); continue;
      case '=': single(Tok::Eq); continue;
      case '-': {
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", 0, {i, i + 2, line, col}});
          advance(2);
          continue;
        }
        if (i + 1 < text.size() && text[i + 1] == 'o') {
          out.push_back({Tok::Lolli, "-o", 0, {i, i + 2, line, col}});
          advance(2);
          continue;
        }
        throw ParseError("expected '->' or '-o'", span);
      }
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", span);
    }
  }
  out.push_back({Tok::End, "", 0, {text.size(), text.size(), line, col}});
  return out;
}

// Placeholder used while free-variable types are still being inferred.
const TypePtr kUnresolved = nullptr;

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  // Free variables: first inferred type wins, conflicts are errors.
  std::map<std::string, TypePtr> free_types;
  std::map<std::string, SourceSpan> free_spans;
  std::vector<Var> bound;

  const Token& peek(std::size_t ahead = 0) const {
    return toks[std::min(pos + ahead, toks.size() - 1)];
  }
  Token next() { return toks[pos == toks.size() - 1 ? pos : pos++]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) throw ParseError("expected " + what, peek().span);
    return next();
  }

  const Var* lookup_bound(const std::string& name) const {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }

  void constrain(const std::string& name, const TypePtr& type, SourceSpan span) {
    auto it = free_types.find(name);
    if (it == free_types.end()) {
      free_types[name] = type;
      free_spans[name] = span;
      return;
    }
    if (!type_equal(it->second, type))
      throw ParseError("variable " + name + " used at type " + to_string(type) +
                           " after earlier use at " + to_string(it->second),
                       span);
  }

  // --- types -------------------------------------------------------------

  TypePtr type0() {
    TypePtr l = type1();
    if (at(Tok::Arrow)) {
      next();
      return SimpleType::arrow(l, type0());
    }
    return l;
  }

  TypePtr type1() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "N") {
      next();
      return SimpleType::nat();
    }
    if (t.kind == Tok::Ident && t.text == "B") {
      next();
      return SimpleType::boolean();
    }
    if (t.kind == Tok::Ident && t.text == "set") {
      next();
      expect(Tok::LParen, "'(' after set");
      TypePtr e = type0();
      expect(Tok::RParen, "')'");
      return SimpleType::finset(e);
    }
    if (t.kind == Tok::LParen) {
      next();
      TypePtr inner = type0();
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw ParseError("expected a type", t.span);
  }

  // --- terms -------------------------------------------------------------
  // expected == nullptr leaves a free variable unresolved until some use
  // pins it down.

  TermPtr term_primary(const TypePtr& expected) {
    const Token& t = peek();
    if (t.kind == Tok::Ident && (t.text == "true" || t.text == "false")) {
      next();
      return Term::bool_const(t.text == "true");
    }
    if (t.kind == Tok::Ident) {
      next();
      if (const Var* b = lookup_bound(t.text)) return Term::var(*b);
      if (expected) constrain(t.text, expected, t.span);
      auto it = free_types.find(t.text);
      return Term::var(t.text, it == free_types.end() ? kUnresolved : it->second);
    }
    if (t.kind == Tok::LParen) {
      next();
      TermPtr inner = term(expected);
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw ParseError("expected a term", t.span);
  }

  bool term_starts() const {
    return at(Tok::Ident) || at(Tok::LParen);
  }

  // Application spine h a1 ... ak. Arguments are expected to be N; the
  // head of a non-trivial spine gets the curried N^k -> expected type.
  TermPtr term(const TypePtr& expected) {
    SourceSpan head_span = peek().span;
    std::vector<std::pair<TermPtr, SourceSpan>> parts;
    parts.emplace_back(term_primary(kUnresolved), head_span);
    while (term_starts()) {
      SourceSpan s = peek().span;
      parts.emplace_back(term_primary(SimpleType::nat()), s);
    }
    if (parts.size() == 1) {
      TermPtr only = parts[0].first;
      if (only->kind() == Term::Kind::Var && expected &&
          lookup_bound(only->as_var().name) == nullptr) {
        constrain(only->as_var().name, expected, parts[0].span);
        return Term::var(only->as_var().name, free_types[only->as_var().name]);
      }
      return only;
    }
    TypePtr head_type = expected ? expected : SimpleType::nat();
    for (std::size_t i = parts.size(); i-- > 1;)
      head_type = SimpleType::arrow(SimpleType::nat(), head_type);
    TermPtr head = parts[0].first;
    if (head->kind() == Term::Kind::Var && lookup_bound(head->as_var().name) == nullptr) {
      constrain(head->as_var().name, head_type, parts[0].span);
      head = Term::var(head->as_var().name, head_type);
    }
    TermPtr out = head;
    for (std::size_t i = 1; i < parts.size(); ++i) out = Term::app(out, parts[i].first);
    return out;
  }

  // --- formulas ----------------------------------------------------------

  FormulaPtr formula0() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) {
      bool universal = t.text == "forall";
      next();
      Token name = expect(Tok::Ident, "a variable name");
      expect(Tok::Colon, "':' after the bound variable");
      TypePtr vt = type0();
      Var v{name.text, vt};
      TermPtr bound_term;
      if (at(Tok::Ident) && peek().text == "in") {
        if (!universal) throw ParseError("bounded quantification uses 'forall'", peek().span);
        next();
        bound_term = term(SimpleType::finset(vt));
      }
      expect(Tok::Dot, "'.' after the binder");
      bound.push_back(v);
      FormulaPtr body = formula0();
      bound.pop_back();
      if (bound_term) return Formula::bforall(v, bound_term, body);
      return universal ? Formula::forall(v, body) : Formula::exists(v, body);
    }
    // Conditional trial: term '?' ... ':' ...
    if (term_starts()) {
      std::size_t saved = pos;
      auto saved_free = free_types;
      auto saved_spans = free_spans;
      try {
        TermPtr sel = term(SimpleType::boolean());
        if (at(Tok::Question)) {
          next();
          FormulaPtr then_b = formula0();
          expect(Tok::Colon, "':' in conditional");
          FormulaPtr else_b = formula0();
          return Formula::cond(sel, then_b, else_b);
        }
      } catch (const ParseError&) {
        // fall through to the ordinary formula parse
      }
      pos = saved;
      free_types = std::move(saved_free);
      free_spans = std::move(saved_spans);
    }
    return formula1();
  }

  FormulaPtr formula1() {
    FormulaPtr l = formula2();
    if (at(Tok::Arrow)) {
      next();
      return Formula::implies(l, formula1());
    }
    if (at(Tok::Lolli)) {
      next();
      return Formula::lolli(l, formula1());
    }
    return l;
  }

  FormulaPtr formula2() {
    FormulaPtr l = formula3();
    for (;;) {
      if (at(Tok::Amp)) {
        next();
        l = Formula::conj(l, formula3());
      } else if (at(Tok::Pipe)) {
        next();
        l = Formula::disj(l, formula3());
      } else if (at(Tok::Star)) {
        next();
        l = Formula::tensor(l, formula3());
      } else if (at(Tok::Plus)) {
        next();
        l = Formula::plus(l, formula3());
      } else {
        return l;
      }
    }
  }

  Modality modality() {
    Token t = expect(Tok::Ident, "a modality (k, d, g, kt, dt, stein[...])");
    if (t.text == "k") return Modality::k();
    if (t.text == "d") return Modality::d();
    if (t.text == "g") return Modality::g();
    if (t.text == "kt") return Modality::kt();
    if (t.text == "dt") return Modality::dt();
    if (t.text == "stein") {
      expect(Tok::LBracket, "'[' after stein");
      if (at(Tok::Ident) && peek().text == "inf") {
        next();
        expect(Tok::RBracket, "']'");
        return Modality::stein_inf();
      }
      Token n = expect(Tok::Nat, "a level or 'inf'");
      expect(Tok::RBracket, "']'");
      return Modality::stein(n.number);
    }
    throw ParseError("unknown modality '" + t.text + "'", t.span);
  }

  FormulaPtr formula3() {
    if (at(Tok::Bang)) {
      next();
      Modality m = modality();
      return Formula::bang(m, formula3());
    }
    return formula4();
  }

  FormulaPtr formula4() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      // A parenthesized term followed by '=' or 'in' is an atomic formula;
      // otherwise this is a parenthesized formula.
      std::size_t saved = pos;
      auto saved_free = free_types;
      auto saved_spans = free_spans;
      bool is_eq = false, is_mem = false;
      try {
        next();
        (void)term(kUnresolved);
        if (at(Tok::RParen)) {
          next();
          is_eq = at(Tok::Eq);
          is_mem = at(Tok::Ident) && peek().text == "in";
        }
      } catch (const ParseError&) {
      }
      pos = saved;
      free_types = saved_free;
      free_spans = std::move(saved_spans);
      if (is_eq) {
        next();
        TermPtr lhs = term(SimpleType::boolean());
        expect(Tok::RParen, "')'");
        expect(Tok::Eq, "'='");
        Token v = expect(Tok::Ident, "'true' or 'false'");
        if (v.text != "true" && v.text != "false")
          throw ParseError("expected 'true' or 'false'", v.span);
        return Formula::eq_bool(lhs, v.text == "true");
      }
      if (is_mem) {
        next();
        TermPtr element = term(kUnresolved);
        expect(Tok::RParen, "')'");
        next();  // 'in'
        TermPtr set = term(SimpleType::finset(term_type_or(element, SimpleType::nat())));
        return Formula::mem(element, set);
      }
      next();
      FormulaPtr inner = formula0();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident)
      throw ParseError("expected a formula", t.span);
    if (t.text == "forall" || t.text == "exists")
      return formula0();

    // ident ... either a predicate atom, a boolean equation or a
    // membership; decide by what follows.
    Token head = next();
    if (at(Tok::LParen)) {
      next();
      std::vector<TermPtr> args;
      if (!at(Tok::RParen)) {
        args.push_back(term(SimpleType::nat()));
        while (at(Tok::Comma)) {
          next();
          args.push_back(term(SimpleType::nat()));
        }
      }
      expect(Tok::RParen, "')'");
      return Formula::atom(head.text, args);
    }
    if (at(Tok::Eq)) {
      next();
      TermPtr lhs = ident_as_term(head, SimpleType::boolean());
      Token v = expect(Tok::Ident, "'true' or 'false'");
      if (v.text != "true" && v.text != "false")
        throw ParseError("expected 'true' or 'false'", v.span);
      return Formula::eq_bool(lhs, v.text == "true");
    }
    if (at(Tok::Ident) && peek().text == "in") {
      next();
      TermPtr element = ident_as_term(head, SimpleType::nat());
      TermPtr set = term(SimpleType::finset(term_type_or(element, SimpleType::nat())));
      return Formula::mem(element, set);
    }
    return Formula::atom(head.text);
  }

  TermPtr ident_as_term(const Token& t, const TypePtr& expected) {
    if (t.text == "true" || t.text == "false") return Term::bool_const(t.text == "true");
    if (const Var* b = lookup_bound(t.text)) return Term::var(*b);
    constrain(t.text, expected, t.span);
    return Term::var(t.text, free_types[t.text]);
  }

  static TypePtr term_type_or(const TermPtr& t, TypePtr fallback) {
    if (t->kind() == Term::Kind::Var && t->as_var().type) return t->as_var().type;
    if (t->kind() == Term::Kind::BoolConst) return SimpleType::boolean();
    return fallback;
  }
};

// Rewrites unresolved free-variable types to their inferred (or default N)
// types.
TermPtr resolve_term(const TermPtr& t, const std::map<std::string, TypePtr>& types);

FormulaPtr resolve(const FormulaPtr& f, const std::map<std::string, TypePtr>& types) {
  auto rt = [&](const TermPtr& t) { return resolve_term(t, types); };
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      std::vector<TermPtr> args;
      for (const auto& a : f->args()) args.push_back(rt(a));
      return Formula::atom(f->pred(), args);
    }
    case Formula::Kind::EqBool:
      return Formula::eq_bool(rt(f->eq_lhs()), f->eq_value());
    case Formula::Kind::Mem:
      return Formula::mem(rt(f->element()), rt(f->set_term()));
    case Formula::Kind::And:
      return Formula::conj(resolve(f->left(), types), resolve(f->right(), types));
    case Formula::Kind::Or:
      return Formula::disj(resolve(f->left(), types), resolve(f->right(), types));
    case Formula::Kind::Implies:
      return Formula::implies(resolve(f->left(), types), resolve(f->right(), types));
    case Formula::Kind::Tensor:
      return Formula::tensor(resolve(f->left(), types), resolve(f->right(), types));
    case Formula::Kind::Plus:
      return Formula::plus(resolve(f->left(), types), resolve(f->right(), types));
    case Formula::Kind::Lolli:
      return Formula::lolli(resolve(f->left(), types), resolve(f->right(), types));
    case Formula::Kind::Bang:
      return Formula::bang(f->modality(), resolve(f->body(), types));
    case Formula::Kind::Forall:
      return Formula::forall(f->bound_var(), resolve(f->body(), types));
    case Formula::Kind::Exists:
      return Formula::exists(f->bound_var(), resolve(f->body(), types));
    case Formula::Kind::BForall:
      return Formula::bforall(f->bound_var(), rt(f->bound_term()), resolve(f->body(), types));
    case Formula::Kind::Cond:
      return Formula::cond(rt(f->selector()), resolve(f->then_branch(), types),
                           resolve(f->else_branch(), types));
  }
  return f;
}

TermPtr resolve_term(const TermPtr& t, const std::map<std::string, TypePtr>& types) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      if (t->as_var().type) return t;
      auto it = types.find(t->as_var().name);
      TypePtr resolved = it != types.end() && it->second ? it->second : SimpleType::nat();
      return Term::var(t->as_var().name, resolved);
    }
    case Term::Kind::App:
      return Term::app(resolve_term(t->fn(), types), resolve_term(t->arg(), types));
    case Term::Kind::BoolConst:
      return t;
  }
  return t;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p{lex(text)};
  FormulaPtr f = p.formula0();
  if (!p.at(Tok::End)) throw ParseError("unexpected trailing input", p.peek().span);
  f = resolve(f, p.free_types);
  if (logic_of(f) == Logic::Mixed)
    throw ParseError("formula mixes intuitionistic and affine connectives",
                     SourceSpan{0, text.size(), 1, 1});
  return f;
}

TypePtr parse_type(const std::string& text) {
  Parser p{lex(text)};
  TypePtr t = p.type0();
  if (!p.at(Tok::End)) throw ParseError("unexpected trailing input", p.peek().span);
  return t;
}

}  // namespace fint
