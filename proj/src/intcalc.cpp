#include "clt/intcalc.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "clt/errors.hpp"

namespace clt {

namespace {

// Antecedents as sorted duplicate-free vectors.
struct SetSequent {
  std::vector<Formula> antecedent;
  Formula succedent;
};

std::vector<Formula> to_set(std::vector<Formula> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string set_key(const SetSequent& s) {
  std::string key = s.succedent.text();
  key += '|';
  for (const auto& f : s.antecedent) {
    key += f.text();
    key += ',';
  }
  return key;
}

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (!f.is_atom()) {
    collect_subformulas(f.lhs(), out);
    collect_subformulas(f.rhs(), out);
  }
}

// A subproof concludes (Delta => G) for a duplicate-free Delta whose
// formulas all sit in the set antecedent; proofs are minimal and get
// weakened to the caller's multiset at the very end.
struct Result {
  std::optional<ProofTree> proof;
  bool clean = true;  // false when a negative answer leaned on a loop cut
};

struct IntSearch {
  std::map<std::string, std::optional<ProofTree>> memo;
  std::set<std::string> in_progress;
  std::set<std::string> visited;

  Result solve(const SetSequent& s) {
    const std::string key = set_key(s);
    if (auto it = memo.find(key); it != memo.end()) return {it->second, true};
    if (in_progress.count(key)) return {std::nullopt, false};
    in_progress.insert(key);
    visited.insert(key);
    Result out = expand(s);
    in_progress.erase(key);
    if (out.proof)
      memo.emplace(key, out.proof);
    else if (out.clean)
      memo.emplace(key, std::nullopt);
    return out;
  }

  // Collapses every duplicated antecedent formula with Contraction nodes.
  static ProofTree contract_to_set(ProofTree t) {
    while (true) {
      std::vector<Formula> seen;
      const Formula* dup = nullptr;
      for (const auto& f : t.conclusion.antecedent) {
        if (std::find(seen.begin(), seen.end(), f) != seen.end()) {
          dup = &f;
          break;
        }
        seen.push_back(f);
      }
      if (!dup) return t;
      Sequent lower = t.conclusion;
      multiset_remove_one(lower.antecedent, *dup);
      t = ProofTree{std::move(lower), Rule::Contraction, {std::move(t)}};
    }
  }

  Result expand(const SetSequent& s) {
    // Axiom.
    for (const auto& f : s.antecedent)
      if (f == s.succedent)
        return {ProofTree{Sequent{{s.succedent}, s.succedent}, Rule::Axiom, {}}, true};

    // Right implication is invertible.
    if (!s.succedent.is_atom()) {
      const Formula e = s.succedent.lhs();
      const Formula f = s.succedent.rhs();
      SetSequent premise{s.antecedent, f};
      premise.antecedent.push_back(e);
      premise.antecedent = to_set(std::move(premise.antecedent));
      Result sub = solve(premise);
      if (!sub.proof) return {std::nullopt, sub.clean};
      ProofTree inner = *sub.proof;
      Sequent conclusion{inner.conclusion.antecedent, s.succedent};
      if (!multiset_remove_one(conclusion.antecedent, e))
        inner = weaken_proof(inner, {e});
      return {ProofTree{std::move(conclusion), Rule::RightImp, {std::move(inner)}}, true};
    }

    // Left implication with contraction folded in: E->F stays available
    // in the E premise and is traded for F in the succedent premise.
    bool clean = true;
    for (const auto& principal : s.antecedent) {
      if (principal.is_atom()) continue;
      const Formula e = principal.lhs();
      const Formula f = principal.rhs();

      Result r1 = solve(SetSequent{s.antecedent, e});
      if (!r1.proof) {
        clean = clean && r1.clean;
        continue;
      }
      SetSequent after{s.antecedent, s.succedent};
      after.antecedent.erase(
          std::remove(after.antecedent.begin(), after.antecedent.end(), principal),
          after.antecedent.end());
      after.antecedent.push_back(f);
      after.antecedent = to_set(std::move(after.antecedent));
      Result r2 = solve(after);
      if (!r2.proof) {
        clean = clean && r2.clean;
        continue;
      }

      ProofTree left = *r2.proof;  // concludes Delta2 => G
      std::vector<Formula> gamma1 = left.conclusion.antecedent;
      if (!multiset_remove_one(gamma1, f)) left = weaken_proof(left, {f});
      ProofTree right = *r1.proof;  // concludes Delta1 => E

      Sequent conclusion{gamma1, s.succedent};
      conclusion.antecedent.insert(conclusion.antecedent.end(),
                                   right.conclusion.antecedent.begin(),
                                   right.conclusion.antecedent.end());
      conclusion.antecedent.push_back(principal);
      ProofTree node{std::move(conclusion), Rule::LeftImp, {std::move(left), std::move(right)}};
      return {contract_to_set(std::move(node)), true};
    }
    return {std::nullopt, clean};
  }
};

SetSequent collapse(const Sequent& s) {
  return SetSequent{to_set(s.antecedent), s.succedent};
}

std::size_t key_space_bound(const Sequent& s) {
  std::set<Formula> subs;
  collect_subformulas(s.succedent, subs);
  for (const auto& f : s.antecedent) collect_subformulas(f, subs);
  const std::size_t n = subs.size();
  if (n >= 50) return static_cast<std::size_t>(-1);  // saturate; desk scale never gets here
  return (std::size_t{1} << n) * n;
}

}  // namespace

bool int_provable(const Sequent& s, IntSearchStats* stats) {
  IntSearch search;
  Result res = search.solve(collapse(s));
  const std::size_t bound = key_space_bound(s);
  if (search.visited.size() > bound)
    throw InternalError("set-sequent search escaped its key space");
  if (stats) {
    stats->visited_keys = search.visited.size();
    stats->key_space_bound = bound;
  }
  return res.proof.has_value();
}

std::optional<ProofTree> int_prove(const Sequent& s) {
  IntSearch search;
  Result res = search.solve(collapse(s));
  if (!res.proof) return std::nullopt;
  // Stretch the minimal conclusion to the requested multiset.
  std::vector<Formula> missing = s.antecedent;
  for (const auto& f : res.proof->conclusion.antecedent)
    if (!multiset_remove_one(missing, f))
      throw InternalError("reconstructed antecedent is not covered by the input");
  return weaken_proof(*res.proof, missing);
}

}  // namespace clt
