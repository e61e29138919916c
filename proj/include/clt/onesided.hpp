#pragma once

#include <vector>

#include "clt/cl7.hpp"
#include "clt/formula.hpp"
#include "clt/onesided_types.hpp"

namespace clt {

// Fixpoint of the rewrites E->F ~> ~E|F, ~(E|F) ~> ~E&~F,
// ~(E&F) ~> ~E|~F, ~~E ~> E, driven by an outer polarity.
NNFFormula nnf(const ClassicalFormula& f, Polarity p);
NNFFormula nnf(const Formula& f, Polarity p);

// The De Morgan dual; nnf_negate(nnf(f, Positive)) == nnf(f, Negative).
NNFFormula nnf_negate(const NNFFormula& f);

ClassicalFormula to_classical(const NNFFormula& f);

// E1,...,En => F becomes the multiset {~E1,...,~En, F} in negation
// normal form.
OneSidedSequent to_one_sided(const Sequent& s);

// Node-by-node image of a CL7 proof in the one-sided system; every
// sequent is to_one_sided of the original. Throws on Contraction nodes.
OneSidedProof translate_proof(const ProofTree& t);

// Axioms are sequents containing a complementary pair G, ~G; the two
// rules are checked with exact multiset bookkeeping.
std::vector<Violation> check_one_sided(const OneSidedProof& p);

}  // namespace clt
