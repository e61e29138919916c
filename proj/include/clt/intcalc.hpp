#pragma once

#include <cstddef>
#include <optional>

#include "clt/cl7.hpp"
#include "clt/formula.hpp"

namespace clt {

struct IntSearchStats {
  std::size_t visited_keys = 0;     // distinct set-sequents touched
  std::size_t key_space_bound = 0;  // 2^n * n for n distinct subformulas
};

// Decides provability in CL7 + Contraction by memoized backward search
// over set-sequents (antecedents collapsed to sets) with in-progress
// loop detection. For each antecedent implication E->F the search tries
// the premises (A => E), retaining E->F, and (A \ {E->F}) + {F} => G.
bool int_provable(const Sequent& s, IntSearchStats* stats = nullptr);

// When provable, a proof in the multiset calculus with explicit
// Contraction nodes, accepted by check_proof(., System::Int) and
// concluding s.
std::optional<ProofTree> int_prove(const Sequent& s);

}  // namespace clt
