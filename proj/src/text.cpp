#include "clt/text.hpp"

#include <cctype>

#include "clt/errors.hpp"

namespace clt {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  bool try_literal(const std::string& lit) {
    if (text.compare(pos, lit.size(), lit) != 0) return false;
    for (std::size_t i = 0; i < lit.size(); ++i) advance();
    return true;
  }

  void expect_literal(const std::string& lit) {
    if (!try_literal(lit)) fail("expected '" + lit + "'");
  }

  std::string atom_token() {
    if (eof() || !std::isalpha(static_cast<unsigned char>(peek())))
      fail("expected a formula");
    std::string name;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      name.push_back(peek());
      advance();
    }
    return name;
  }
};

Formula parse_impl(Cursor& c);

Formula parse_atomf(Cursor& c) {
  c.skip_ws();
  if (!c.eof() && c.peek() == '(') {
    c.advance();
    Formula inner = parse_impl(c);
    c.skip_ws();
    if (c.eof() || c.peek() != ')') c.fail("expected ')'");
    c.advance();
    return inner;
  }
  return Formula::atom(c.atom_token());
}

Formula parse_impl(Cursor& c) {
  Formula left = parse_atomf(c);
  c.skip_ws();
  if (c.try_literal("->")) {
    Formula right = parse_impl(c);
    return Formula::implies(std::move(left), std::move(right));
  }
  return left;
}

void expect_end(Cursor& c) {
  c.skip_ws();
  if (!c.eof()) c.fail("unexpected trailing input");
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Cursor c{text};
  Formula f = parse_impl(c);
  expect_end(c);
  return f;
}

Sequent parse_sequent(const std::string& text) {
  Cursor c{text};
  std::vector<Formula> antecedent;
  c.skip_ws();
  if (!c.try_literal("=>")) {
    antecedent.push_back(parse_impl(c));
    c.skip_ws();
    while (c.try_literal(",")) {
      antecedent.push_back(parse_impl(c));
      c.skip_ws();
    }
    c.expect_literal("=>");
  }
  Formula succedent = parse_impl(c);
  expect_end(c);
  return Sequent{std::move(antecedent), std::move(succedent)};
}

std::string print_formula(const Formula& f) { return f.text(); }

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += s.antecedent[i].text();
  }
  if (!s.antecedent.empty()) out += " ";
  out += "=> ";
  out += s.succedent.text();
  return out;
}

namespace {

// Precedence: atoms/negation 4, & 3, | 2, -> 1 (right-associative).
int classical_prec(const ClassicalFormula& f) {
  switch (f.kind()) {
    case ClassicalFormula::Kind::Atom:
    case ClassicalFormula::Kind::Neg:
      return 4;
    case ClassicalFormula::Kind::And:
      return 3;
    case ClassicalFormula::Kind::Or:
      return 2;
    case ClassicalFormula::Kind::Imp:
      return 1;
  }
  return 0;
}

void print_classical_rec(const ClassicalFormula& f, int parent_prec, std::string& out) {
  const int prec = classical_prec(f);
  const bool parens = prec < parent_prec;
  if (parens) out += "(";
  switch (f.kind()) {
    case ClassicalFormula::Kind::Atom:
      out += f.atom_name();
      break;
    case ClassicalFormula::Kind::Neg:
      out += "~";
      print_classical_rec(f.inner(), 5, out);
      break;
    case ClassicalFormula::Kind::And:
    case ClassicalFormula::Kind::Or: {
      const char* sep = f.kind() == ClassicalFormula::Kind::And ? " & " : " | ";
      for (std::size_t i = 0; i < f.parts().size(); ++i) {
        if (i) out += sep;
        print_classical_rec(f.parts()[i], prec + 1, out);
      }
      break;
    }
    case ClassicalFormula::Kind::Imp:
      print_classical_rec(f.lhs(), prec + 1, out);
      out += " -> ";
      print_classical_rec(f.rhs(), prec, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string print_classical(const ClassicalFormula& f) {
  std::string out;
  print_classical_rec(f, 0, out);
  return out;
}

std::string print_nnf(const NNFFormula& f) { return f.text(); }

std::string print_one_sided(const OneSidedSequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].text();
  }
  return out;
}

namespace {

NNFFormula parse_nnf_rec(Cursor& c) {
  c.skip_ws();
  if (!c.eof() && c.peek() == '(') {
    c.advance();
    NNFFormula left = parse_nnf_rec(c);
    c.skip_ws();
    bool conj;
    if (c.try_literal("&")) {
      conj = true;
    } else if (c.try_literal("|")) {
      conj = false;
    } else {
      c.fail("expected '&' or '|'");
    }
    NNFFormula right = parse_nnf_rec(c);
    c.skip_ws();
    if (c.eof() || c.peek() != ')') c.fail("expected ')'");
    c.advance();
    return conj ? NNFFormula::conj(std::move(left), std::move(right))
                : NNFFormula::disj(std::move(left), std::move(right));
  }
  bool positive = true;
  if (c.try_literal("~")) positive = false;
  return NNFFormula::literal(c.atom_token(), positive);
}

}  // namespace

NNFFormula parse_nnf(const std::string& text) {
  Cursor c{text};
  NNFFormula f = parse_nnf_rec(c);
  expect_end(c);
  return f;
}

OneSidedSequent parse_one_sided(const std::string& text) {
  Cursor c{text};
  OneSidedSequent out;
  c.skip_ws();
  if (c.eof()) return out;
  out.push_back(parse_nnf_rec(c));
  c.skip_ws();
  while (c.try_literal(",")) {
    out.push_back(parse_nnf_rec(c));
    c.skip_ws();
  }
  expect_end(c);
  return out;
}

}  // namespace clt
