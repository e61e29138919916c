#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clt/formula.hpp"

namespace clt {

// A witness that a formula is a substitution instance of a binary
// tautology: substitute(template_formula, substitution) equals the
// concrete formula, the template is binary and tautological. The cut
// records where the template's atoms sit in the concrete tree, as
// root-to-node paths over {'0','1'} (left/right child of an
// implication); together the paths form an antichain covering every
// leaf.
struct Abstraction {
  Formula template_formula;
  Substitution substitution;
  std::vector<std::string> cut;
};

// Every ->-formula over the given atoms with at most max_connectives
// implication nodes, each exactly once. Order: connective count
// ascending; within a size, by (left-subtree size, left formula, right
// formula), atoms in the given order.
class FormulaEnumerator {
public:
  FormulaEnumerator(std::vector<Atom> atoms, int max_connectives);
  std::optional<Formula> next();

private:
  const std::vector<Formula>& pool(int size);
  std::vector<Atom> atoms_;
  int max_connectives_;
  int size_ = 0;
  std::size_t index_ = 0;
  std::vector<std::vector<Formula>> by_size_;
};

std::vector<Formula> enumerate_formulas(const std::vector<Atom>& atoms, int max_connectives);

// The enumeration stream filtered by is_binary and is_tautology.
std::vector<Formula> enumerate_binary_tautologies(const std::vector<Atom>& atoms,
                                                  int max_connectives);

// Brute-force abstraction search: all cuts (shallower first), all
// groupings of cut points into classes of size <= 2 carrying
// structurally equal subformulas, merges tried before fresh classes.
// Returns the first grouping whose induced binary template is
// tautological.
std::optional<Abstraction> binary_anti_instance(const Formula& h);

bool is_instance_of_binary_tautology(const Formula& h);

}  // namespace clt
