#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "clt/formula.hpp"

namespace clt {

// Negation-normal multiplicative formula: negation only on atoms, no
// implication constructor. Binary two-child conjunction/disjunction.
class NNFFormula {
public:
  enum class Kind { Literal, And, Or };

  static NNFFormula literal(Atom name, bool positive);
  static NNFFormula conj(NNFFormula lhs, NNFFormula rhs);
  static NNFFormula disj(NNFFormula lhs, NNFFormula rhs);

  Kind kind() const noexcept;
  const Atom& atom_name() const;  // Kind::Literal
  bool positive() const;          // Kind::Literal
  const NNFFormula& lhs() const;  // Kind::And / Kind::Or
  const NNFFormula& rhs() const;

  const std::string& text() const noexcept;

  friend bool operator==(const NNFFormula& a, const NNFFormula& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }
  friend std::strong_ordering operator<=>(const NNFFormula& a, const NNFFormula& b) {
    return a.text() <=> b.text();
  }

private:
  struct Node;
  explicit NNFFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Finite multiset of NNF formulas.
using OneSidedSequent = std::vector<NNFFormula>;

enum class OneSidedRule { Axiom, RightImp, LeftImp };

struct OneSidedProof {
  OneSidedSequent conclusion;
  OneSidedRule rule = OneSidedRule::Axiom;
  std::vector<OneSidedProof> premises;
};

enum class Polarity { Positive, Negative };

}  // namespace clt
