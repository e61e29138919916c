#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clt {

// Atoms are bare identifier strings ([A-Za-z][A-Za-z0-9_]*); identity is
// exact string equality, no normalization.
using Atom = std::string;

// Immutable implicative formula: an atom or an implication. Nodes are
// shared, the rendered text ("(P->Q)->R", right-associative arrows
// implicit) is cached at construction and doubles as the canonical key
// for ordering and multiset bookkeeping.
class Formula {
public:
  static Formula atom(Atom name);
  static Formula implies(Formula antecedent, Formula consequent);

  bool is_atom() const noexcept;
  const Atom& atom_name() const;  // requires is_atom()
  const Formula& lhs() const;     // requires !is_atom()
  const Formula& rhs() const;     // requires !is_atom()

  // Number of implication nodes.
  int connective_count() const noexcept;

  // Minimal-parenthesis rendering; parse_formula(text()) reproduces *this.
  const std::string& text() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return a.text() <=> b.text();
  }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Two-sided sequent: finite multiset antecedent, single succedent.
// The antecedent vector preserves construction order; equality is
// multiset equality.
struct Sequent {
  std::vector<Formula> antecedent;
  Formula succedent;

  // Copy with the antecedent sorted by formula text.
  Sequent canonical() const;

  friend bool operator==(const Sequent& a, const Sequent& b);
};

bool multiset_equal(std::vector<Formula> a, std::vector<Formula> b);

// Removes one copy of f; returns false when absent.
bool multiset_remove_one(std::vector<Formula>& ms, const Formula& f);

// Propositional formula over atoms with negation, n-ary conjunction and
// disjunction, and implication. Implication is kept as a constructor so
// sequent translations print recognizably; eval reads E->F as ~E|F.
class ClassicalFormula {
public:
  enum class Kind { Atom, Neg, And, Or, Imp };

  static ClassicalFormula atom(Atom name);
  static ClassicalFormula neg(ClassicalFormula inner);
  static ClassicalFormula conj(std::vector<ClassicalFormula> parts);  // nonempty
  static ClassicalFormula disj(std::vector<ClassicalFormula> parts);  // nonempty
  static ClassicalFormula implies(ClassicalFormula lhs, ClassicalFormula rhs);

  Kind kind() const noexcept;
  const Atom& atom_name() const;                        // Kind::Atom
  const ClassicalFormula& inner() const;                // Kind::Neg
  const std::vector<ClassicalFormula>& parts() const;   // Kind::And / Kind::Or
  const ClassicalFormula& lhs() const;                  // Kind::Imp
  const ClassicalFormula& rhs() const;                  // Kind::Imp

private:
  struct Node;
  explicit ClassicalFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Total truth assignment over the atoms of the formula being evaluated.
using Assignment = std::map<Atom, bool>;

using Substitution = std::map<Atom, Formula>;

// ---- operations ----

// The atom at the rightmost occurrence: head(E->F) = head(F).
const Atom& head(const Formula& f);

int occurrences(const Formula& f, const Atom& a);
int occurrences(const Sequent& s, const Atom& a);

// No atom occurs more than twice.
bool is_binary(const Formula& f);
bool is_binary(const Sequent& s);

std::set<Atom> atoms_of(const Formula& f);
std::set<Atom> atoms_of(const Sequent& s);
std::set<Atom> atoms_of(const ClassicalFormula& f);

// Homomorphic replacement; atoms absent from s map to themselves.
Formula substitute(const Formula& f, const Substitution& s);
Sequent substitute(const Sequent& seq, const Substitution& s);

// The unique s with substitute(b, s) == h, when one exists.
std::optional<Substitution> match_instance(const Formula& h, const Formula& b);

// Relevance per antecedent occurrence: least set closed under "head
// occurs in the succedent" and "head occurs in a member". mask[i] marks
// antecedent[i].
std::vector<bool> relevant_mask(const Sequent& s);
std::vector<Formula> relevant_formulas(const Sequent& s);

// E1 & ... & En -> F; empty antecedent yields F, a single formula is not
// wrapped in a conjunction.
ClassicalFormula sequent_to_formula(const Sequent& s);

ClassicalFormula to_classical(const Formula& f);

// Classical truth value; throws EvalError when an atom is unassigned.
bool eval(const ClassicalFormula& f, const Assignment& a);

// Truth-table check over the formula's atoms in sorted name order.
bool is_tautology(const ClassicalFormula& f);
bool is_tautology(const Formula& f);
bool is_tautology(const Sequent& s);

}  // namespace clt
