#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clt/formula.hpp"

namespace clt {

// CL7 is the contraction-free calculus; Int adds the Contraction rule.
enum class System { CL7, Int };

enum class Rule { Axiom, RightImp, LeftImp, Contraction };

// Rule-labeled derivation tree in the two-sided multiset calculus.
// Premise counts: Axiom 0; RightImp and Contraction 1; LeftImp 2 with
// premises[0] the (Gamma, F => G) premise and premises[1] the
// (Delta => E) premise.
struct ProofTree {
  Sequent conclusion;
  Rule rule = Rule::Axiom;
  std::vector<ProofTree> premises;
};

struct Violation {
  std::string path;  // "root", "root.0", ...
  std::string message;
};

// The succedent occurs (>= 1 copy) in the antecedent.
bool is_axiom(const Sequent& s);

// Validates every node with exact multiset bookkeeping; rejects
// Contraction under System::CL7. Empty result means the tree checks.
std::vector<Violation> check_proof(const ProofTree& t, System sys);

// Complete backward search: Axiom, then RightImp when the succedent is
// an implication, then LeftImp over every distinct antecedent
// implication in canonical print order with multiset splits in
// lexicographic subset order. Memoizes on the canonical sequent form;
// the memo is call-local. Absence means the sequent is unprovable.
std::optional<ProofTree> prove_exhaustive(const Sequent& s);

// The relevance-guided constructor for binary tautological sequents.
// Preconditions are validated eagerly: throws NotBinaryError or
// NotTautologicalError. InternalError cannot occur on valid inputs.
ProofTree prove_binary_guided(const Sequent& s);

// A checking CL7 proof of the conclusion with `extra` added to the
// antecedent; extras are pushed up into Axiom slack, and into the left
// premise at LeftImp nodes.
ProofTree weaken_proof(const ProofTree& t, const std::vector<Formula>& extra);

// Pointwise substitution through every sequent of the tree.
ProofTree substitute_proof(const ProofTree& t, const Substitution& s);

// prove_exhaustive(=> h) is present.
bool provable_cl7(const Formula& h);

// Proof assembled from a binary-tautology witness: guided proof of the
// template, then substitution. Present iff prove_exhaustive(=> h) is.
std::optional<ProofTree> prove_via_abstraction(const Formula& h);

}  // namespace clt
