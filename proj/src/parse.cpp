#include "deon/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "deon/errors.hpp"

namespace deon {

namespace {

enum class Tok {
  Word,     // identifier, number, or atom with attached argument list
  LParen,
  RParen,
  LBracket,
  RBracket,
  Tilde,
  Amp,
  Pipe,
  Arrow,    // -> and =>
  Colon,
  Comma,
  Minus,
  Terminator,  // newline or ;
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool reserved_word(const std::string& w) {
  return w == "O" || w == "P" || w == "true" || w == "false";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  const auto push = [&](Tok kind, std::string t, int l, int c) {
    out.push_back(Token{kind, std::move(t), l, c});
  };
  while (i < text.size()) {
    const char c = text[i];
    const int l = line;
    const int cl = col;
    if (c == '\n') {
      push(Tok::Terminator, "\n", l, cl);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i, ++col;
      continue;
    }
    if (word_char(c)) {
      std::string w;
      while (i < text.size() && word_char(text[i])) {
        w += text[i];
        ++i;
        ++col;
      }
      // c(l,A)-style atoms: a word directly followed by a parenthesized
      // argument list (no space) lexes as one token.
      if (i < text.size() && text[i] == '(' && !reserved_word(w)) {
        std::string full = w + "(";
        ++i;
        ++col;
        bool expect_word = true;
        while (true) {
          if (i >= text.size()) throw SyntaxError(line, col, "unterminated atom arguments");
          const char a = text[i];
          if (a == ' ' || a == '\t') {
            ++i;
            ++col;
            continue;
          }
          if (expect_word) {
            if (!word_char(a))
              throw SyntaxError(line, col, "expected argument in atom name");
            while (i < text.size() && word_char(text[i])) {
              full += text[i];
              ++i;
              ++col;
            }
            expect_word = false;
            continue;
          }
          if (a == ',') {
            full += ',';
            ++i;
            ++col;
            expect_word = true;
            continue;
          }
          if (a == ')') {
            full += ')';
            ++i;
            ++col;
            break;
          }
          throw SyntaxError(line, col, "expected ',' or ')' in atom name");
        }
        push(Tok::Word, full, l, cl);
        continue;
      }
      push(Tok::Word, w, l, cl);
      continue;
    }
    switch (c) {
      case ';':
        push(Tok::Terminator, ";", l, cl);
        ++i;
        ++col;
        continue;
      case '(':
        push(Tok::LParen, "(", l, cl);
        ++i;
        ++col;
        continue;
      case ')':
        push(Tok::RParen, ")", l, cl);
        ++i;
        ++col;
        continue;
      case '[':
        push(Tok::LBracket, "[", l, cl);
        ++i;
        ++col;
        continue;
      case ']':
        push(Tok::RBracket, "]", l, cl);
        ++i;
        ++col;
        continue;
      case '~':
        push(Tok::Tilde, "~", l, cl);
        ++i;
        ++col;
        continue;
      case '&':
        push(Tok::Amp, "&", l, cl);
        ++i;
        ++col;
        continue;
      case '|':
        push(Tok::Pipe, "|", l, cl);
        ++i;
        ++col;
        continue;
      case ':':
        push(Tok::Colon, ":", l, cl);
        ++i;
        ++col;
        continue;
      case ',':
        push(Tok::Comma, ",", l, cl);
        ++i;
        ++col;
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::Arrow, "->", l, cl);
          i += 2;
          col += 2;
          continue;
        }
        push(Tok::Minus, "-", l, cl);
        ++i;
        ++col;
        continue;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::Arrow, "=>", l, cl);
          i += 2;
          col += 2;
          continue;
        }
        throw SyntaxError(l, cl, "unexpected '='");
      default:
        throw SyntaxError(l, cl, std::string("unexpected character '") + c + "'");
    }
  }
  push(Tok::End, "", line, col);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Problem parse() {
    while (true) {
      skip_terminators();
      if (peek().kind == Tok::End) break;
      statement();
      expect_statement_end();
    }
    prob_.finalize();
    // Queries that pin the tableau engine make fragment violations a parse
    // failure instead of a runtime one.
    for (const auto& q : prob_.queries) {
      if (q.engine == Engine::tableau)
        for (const auto& f : prob_.all_formulas()) validate_boxed_literal_fragment(f);
    }
    return prob_;
  }

  Formula parse_single_formula(const Problem& context) {
    for (const auto& a : context.atom_names()) atoms_.insert(a);
    for (const auto& m : context.modalities) modalities_.insert(m.label);
    modalities_.insert(kDefaultModality.label);
    skip_terminators();
    Formula f = formula();
    skip_terminators();
    if (peek().kind != Tok::End)
      throw SyntaxError(peek().line, peek().col, "trailing input after formula");
    return f;
  }

 private:
  const Token& peek(int ahead = 0) const {
    const std::size_t idx = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[idx];
  }
  Token next() {
    const Token& t = peek();
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  void skip_terminators() {
    while (peek().kind == Tok::Terminator) ++pos_;
  }
  void expect_statement_end() {
    const Token& t = peek();
    if (t.kind == Tok::Terminator) {
      ++pos_;
      return;
    }
    if (t.kind == Tok::End) return;
    throw SyntaxError(t.line, t.col, "expected end of statement, got '" + t.text + "'");
  }
  Token expect_word(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Tok::Word) throw SyntaxError(t.line, t.col, "expected " + what);
    return next();
  }
  void expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) throw SyntaxError(t.line, t.col, "expected " + what);
    ++pos_;
  }

  void statement() {
    const Token kw = expect_word("statement keyword");
    if (kw.text == "modality") {
      const Token m = expect_word("modality label");
      if (modalities_.count(m.text))
        throw ValidationError("duplicate modality declaration: " + m.text);
      modalities_.insert(m.text);
      prob_.modalities.push_back(ModalityId{m.text});
      return;
    }
    if (kw.text == "partition") {
      Partition p;
      p.site = expect_word("partition site").text;
      expect(Tok::Colon, "':' after partition site");
      p.values.push_back(expect_word("partition value").text);
      while (peek().kind == Tok::Pipe) {
        ++pos_;
        p.values.push_back(expect_word("partition value").text);
      }
      for (const auto& name : p.atom_names()) atoms_.insert(name);
      prob_.partitions.push_back(std::move(p));
      return;
    }
    if (kw.text == "atom") {
      const Token a = expect_word("atom name");
      atoms_.insert(a.text);
      prob_.declared_atoms.push_back(a.text);
      return;
    }
    if (kw.text == "fact") {
      prob_.facts.push_back(formula());
      return;
    }
    if (kw.text == "norm") {
      prob_.norms.push_back(formula());
      return;
    }
    if (kw.text == "observe") {
      bool neg = false;
      if (peek().kind == Tok::Tilde) {
        ++pos_;
        neg = true;
      }
      const Token a = expect_word("observed atom");
      Formula lit = make_atom(a);
      prob_.observations.push_back(neg ? Formula::negation(lit) : lit);
      return;
    }
    if (kw.text == "option") {
      std::string name = expect_word("option name").text;
      while (peek().kind == Tok::Minus) {
        ++pos_;
        name += "_" + expect_word("option name").text;
      }
      if (name == "contrapose") {
        prob_.contrapose = true;
        return;
      }
      if (name == "tbox_constraints") {
        prob_.tbox_constraints = true;
        return;
      }
      throw ValidationError("unknown option: " + name);
    }
    if (kw.text == "query") {
      prob_.queries.push_back(query());
      return;
    }
    throw SyntaxError(kw.line, kw.col, "expected statement keyword, got '" + kw.text + "'");
  }

  Query query() {
    Query q;
    const Token kind = expect_word("query kind");
    if (kind.text == "consistency") {
      q.kind = Query::Kind::consistency;
    } else if (kind.text == "obligations") {
      q.kind = Query::Kind::obligations;
    } else if (kind.text == "turn") {
      q.kind = Query::Kind::must_check;
      q.modality = bracket_modality();
      q.formula = formula();
    } else if (kind.text == "model") {
      q.kind = Query::Kind::find_model;
      if (!at_query_tail()) q.formula = formula();
    } else if (kind.text == "entails") {
      q.kind = Query::Kind::entails;
      q.formula = formula();
    } else {
      throw SyntaxError(kind.line, kind.col, "unknown query kind '" + kind.text + "'");
    }
    if (peek().kind == Tok::Word && peek().text == "via") {
      ++pos_;
      const Token e = expect_word("engine name");
      if (e.text == "tableau")
        q.engine = Engine::tableau;
      else if (e.text == "hyper" || e.text == "hypertableau")
        q.engine = Engine::hyper;
      else if (e.text == "both")
        q.engine = Engine::both;
      else
        throw SyntaxError(e.line, e.col, "unknown engine '" + e.text + "'");
    }
    return q;
  }

  bool at_query_tail() const {
    const Token& t = peek();
    if (t.kind == Tok::Terminator || t.kind == Tok::End) return true;
    return t.kind == Tok::Word && t.text == "via";
  }

  ModalityId bracket_modality() {
    if (peek().kind != Tok::LBracket) return kDefaultModality;
    ++pos_;
    const Token m = expect_word("modality label");
    expect(Tok::RBracket, "']'");
    return resolve_modality(m);
  }

  ModalityId resolve_modality(const Token& t) {
    if (!modalities_.count(t.text)) {
      if (t.text != kDefaultModality.label)
        throw ValidationError("undeclared modality '" + t.text + "' at " +
                              std::to_string(t.line) + ":" + std::to_string(t.col));
      modalities_.insert(t.text);
      prob_.modalities.push_back(kDefaultModality);
    }
    return ModalityId{t.text};
  }

  Formula make_atom(const Token& t) {
    if (!atoms_.count(t.text))
      throw ValidationError("undeclared atom '" + t.text + "' at " + std::to_string(t.line) +
                            ":" + std::to_string(t.col));
    return Formula::atom(t.text);
  }

  Formula formula() { return implication(); }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      ++pos_;
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Pipe) {
      ++pos_;
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::Amp) {
      ++pos_;
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::Tilde) {
      ++pos_;
      return Formula::negation(unary());
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Word) {
      if (t.text == "O" || t.text == "P") {
        const Token op = next();
        ModalityId m = kDefaultModality;
        if (peek().kind == Tok::LBracket) {
          ++pos_;
          const Token label = expect_word("modality label");
          expect(Tok::RBracket, "']'");
          m = resolve_modality(label);
        } else {
          resolve_modality(Token{Tok::Word, kDefaultModality.label, op.line, op.col});
        }
        Formula inner = unary();
        return op.text == "O" ? Formula::box(m, inner) : Formula::diamond(m, inner);
      }
      if (t.text == "true") {
        ++pos_;
        return Formula::top();
      }
      if (t.text == "false") {
        ++pos_;
        return Formula::bottom();
      }
      const Token a = next();
      return make_atom(a);
    }
    throw SyntaxError(t.line, t.col, "expected formula, got '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Problem prob_;
  std::set<std::string> atoms_;
  std::set<std::string> modalities_;
};

std::string render_query(const Query& q) {
  std::string out = "query ";
  switch (q.kind) {
    case Query::Kind::consistency:
      out += "consistency";
      break;
    case Query::Kind::obligations:
      out += "obligations";
      break;
    case Query::Kind::must_check:
      out += "turn";
      if (q.modality != kDefaultModality) out += "[" + q.modality.label + "]";
      out += " " + to_string(*q.formula);
      break;
    case Query::Kind::find_model:
      out += "model";
      if (q.formula) out += " " + to_string(*q.formula);
      break;
    case Query::Kind::entails:
      out += "entails " + to_string(*q.formula);
      break;
  }
  if (q.engine) {
    out += " via ";
    switch (*q.engine) {
      case Engine::tableau:
        out += "tableau";
        break;
      case Engine::hyper:
        out += "hyper";
        break;
      case Engine::both:
        out += "both";
        break;
    }
  }
  return out;
}

}  // namespace

Problem parse_problem(std::string_view text) { return Parser(text).parse(); }

Formula parse_formula(std::string_view text, const Problem& context) {
  return Parser(text).parse_single_formula(context);
}

std::string render_problem(const Problem& p) {
  std::string out;
  for (const auto& m : p.modalities) out += "modality " + m.label + "\n";
  for (const auto& part : p.partitions) {
    out += "partition " + part.site + ": ";
    for (std::size_t i = 0; i < part.values.size(); ++i) {
      if (i) out += "|";
      out += part.values[i];
    }
    out += "\n";
  }
  for (const auto& a : p.declared_atoms) out += "atom " + a + "\n";
  for (const auto& f : p.facts) out += "fact " + to_string(f) + "\n";
  for (const auto& obs : p.observations) out += "observe " + to_string(obs) + "\n";
  for (const auto& n : p.norms) out += "norm " + to_string(n) + "\n";
  if (p.contrapose) out += "option contrapose\n";
  if (p.tbox_constraints) out += "option tbox_constraints\n";
  for (const auto& q : p.queries) out += render_query(q) + "\n";
  return out;
}

}  // namespace deon
