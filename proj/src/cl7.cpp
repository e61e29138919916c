#include "clt/cl7.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "clt/errors.hpp"
#include "clt/text.hpp"

namespace clt {

bool is_axiom(const Sequent& s) {
  for (const auto& f : s.antecedent)
    if (f == s.succedent) return true;
  return false;
}

namespace {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Axiom: return "axiom";
    case Rule::RightImp: return "right_imp";
    case Rule::LeftImp: return "left_imp";
    case Rule::Contraction: return "contraction";
  }
  return "?";
}

void check_node(const ProofTree& t, System sys, const std::string& path,
                std::vector<Violation>& out) {
  auto bad = [&](const std::string& msg) { out.push_back({path, msg}); };
  const Sequent& c = t.conclusion;
  switch (t.rule) {
    case Rule::Axiom: {
      if (!t.premises.empty()) bad("axiom node with premises");
      if (!is_axiom(c)) bad("succedent does not occur in the antecedent: " + print_sequent(c));
      break;
    }
    case Rule::RightImp: {
      if (t.premises.size() != 1) {
        bad("right_imp needs exactly one premise");
        break;
      }
      if (c.succedent.is_atom()) {
        bad("right_imp conclusion succedent is not an implication");
        break;
      }
      const Sequent& p = t.premises[0].conclusion;
      std::vector<Formula> expected = c.antecedent;
      expected.push_back(c.succedent.lhs());
      if (!(p.succedent == c.succedent.rhs()) || !multiset_equal(expected, p.antecedent))
        bad("right_imp premise should be " +
            print_sequent(Sequent{expected, c.succedent.rhs()}) + ", got " + print_sequent(p));
      break;
    }
    case Rule::LeftImp: {
      if (t.premises.size() != 2) {
        bad("left_imp needs exactly two premises");
        break;
      }
      const Sequent& left = t.premises[0].conclusion;   // Gamma, F => G
      const Sequent& right = t.premises[1].conclusion;  // Delta => E
      if (!(left.succedent == c.succedent)) {
        bad("left premise succedent differs from the conclusion succedent");
        break;
      }
      const Formula& e = right.succedent;
      bool ok = false;
      // Candidate principal formulas E->F: F drawn from the left premise.
      for (const auto& f : left.antecedent) {
        Formula principal = Formula::implies(e, f);
        std::vector<Formula> assembled = left.antecedent;
        if (!multiset_remove_one(assembled, f)) continue;
        assembled.insert(assembled.end(), right.antecedent.begin(), right.antecedent.end());
        assembled.push_back(principal);
        if (multiset_equal(assembled, c.antecedent)) {
          ok = true;
          break;
        }
      }
      if (!ok) bad("left_imp multiset bookkeeping fails for conclusion " + print_sequent(c));
      break;
    }
    case Rule::Contraction: {
      if (sys == System::CL7) {
        bad("contraction not in CL7");
        break;
      }
      if (t.premises.size() != 1) {
        bad("contraction needs exactly one premise");
        break;
      }
      const Sequent& p = t.premises[0].conclusion;
      if (!(p.succedent == c.succedent)) {
        bad("contraction premise succedent differs");
        break;
      }
      bool ok = false;
      if (p.antecedent.size() == c.antecedent.size() + 1) {
        // The premise must be the conclusion plus one duplicate copy.
        std::vector<Formula> diff = p.antecedent;
        for (const auto& f : c.antecedent) {
          if (!multiset_remove_one(diff, f)) {
            diff.clear();
            break;
          }
        }
        if (diff.size() == 1) {
          for (const auto& f : c.antecedent)
            if (f == diff[0]) ok = true;
        }
      }
      if (!ok) bad("contraction premise is not the conclusion plus one duplicate copy");
      break;
    }
  }
  for (std::size_t i = 0; i < t.premises.size(); ++i)
    check_node(t.premises[i], sys, path + "." + std::to_string(i), out);
}

}  // namespace

std::vector<Violation> check_proof(const ProofTree& t, System sys) {
  std::vector<Violation> out;
  check_node(t, sys, "root", out);
  return out;
}

namespace {

std::string sequent_key(const Sequent& canonical) {
  std::string key = canonical.succedent.text();
  key += '|';
  for (const auto& f : canonical.antecedent) {
    key += f.text();
    key += ',';
  }
  return key;
}

struct ExhaustiveSearch {
  std::map<std::string, std::optional<ProofTree>> memo;

  // s must be canonical (antecedent sorted by text).
  const std::optional<ProofTree>& search(const Sequent& s) {
    const std::string key = sequent_key(s);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::optional<ProofTree> found;
    if (is_axiom(s)) {
      found = ProofTree{s, Rule::Axiom, {}};
    }
    if (!found && !s.succedent.is_atom()) {
      Sequent premise{s.antecedent, s.succedent.rhs()};
      premise.antecedent.push_back(s.succedent.lhs());
      const auto& sub = search(premise.canonical());
      if (sub) found = ProofTree{s, Rule::RightImp, {*sub}};
    }
    if (!found) {
      // Distinct antecedent implications in canonical print order.
      std::vector<Formula> tried;
      for (std::size_t i = 0; i < s.antecedent.size() && !found; ++i) {
        const Formula& principal = s.antecedent[i];
        if (principal.is_atom()) continue;
        if (std::find(tried.begin(), tried.end(), principal) != tried.end()) continue;
        tried.push_back(principal);
        std::vector<Formula> rest = s.antecedent;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t n = rest.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !found; ++mask) {
          Sequent left{{}, s.succedent};   // Gamma, F => G
          Sequent right{{}, principal.lhs()};  // Delta => E
          for (std::size_t j = 0; j < n; ++j) {
            if ((mask >> j) & 1)
              left.antecedent.push_back(rest[j]);
            else
              right.antecedent.push_back(rest[j]);
          }
          left.antecedent.push_back(principal.rhs());
          const auto& lp = search(left.canonical());
          if (!lp) continue;
          const auto& rp = search(right.canonical());
          if (!rp) continue;
          found = ProofTree{s, Rule::LeftImp, {*lp, *rp}};
        }
      }
    }
    return memo.emplace(key, std::move(found)).first->second;
  }
};

}  // namespace

std::optional<ProofTree> prove_exhaustive(const Sequent& s) {
  ExhaustiveSearch search;
  return search.search(s.canonical());
}

ProofTree weaken_proof(const ProofTree& t, const std::vector<Formula>& extra) {
  if (extra.empty()) return t;
  ProofTree out{t.conclusion, t.rule, {}};
  out.conclusion.antecedent.insert(out.conclusion.antecedent.end(), extra.begin(), extra.end());
  switch (t.rule) {
    case Rule::Axiom:
      break;
    case Rule::RightImp:
    case Rule::Contraction:
      out.premises.push_back(weaken_proof(t.premises[0], extra));
      break;
    case Rule::LeftImp:
      out.premises.push_back(weaken_proof(t.premises[0], extra));
      out.premises.push_back(t.premises[1]);
      break;
  }
  return out;
}

ProofTree substitute_proof(const ProofTree& t, const Substitution& s) {
  ProofTree out{substitute(t.conclusion, s), t.rule, {}};
  out.premises.reserve(t.premises.size());
  for (const auto& p : t.premises) out.premises.push_back(substitute_proof(p, s));
  return out;
}

namespace {

// Relevance-guided construction; s is binary and tautological throughout.
ProofTree guided(const Sequent& s) {
  if (!s.succedent.is_atom()) {
    Sequent premise{s.antecedent, s.succedent.rhs()};
    premise.antecedent.push_back(s.succedent.lhs());
    return ProofTree{s, Rule::RightImp, {guided(premise)}};
  }
  if (is_axiom(s)) return ProofTree{s, Rule::Axiom, {}};

  const Atom& p = s.succedent.atom_name();
  std::size_t principal_idx = s.antecedent.size();
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (!s.antecedent[i].is_atom() && head(s.antecedent[i]) == p) {
      principal_idx = i;
      break;  // unique by binarity
    }
  }
  if (principal_idx == s.antecedent.size())
    throw InternalError("no antecedent implication has head " + p +
                        " in " + print_sequent(s));
  const Formula principal = s.antecedent[principal_idx];
  std::vector<Formula> gamma = s.antecedent;
  gamma.erase(gamma.begin() + static_cast<std::ptrdiff_t>(principal_idx));

  // Left target: Gamma, F => P with F appended last.
  Sequent left_target{gamma, s.succedent};
  left_target.antecedent.push_back(principal.rhs());
  Sequent right_target{gamma, principal.lhs()};

  const auto mask1 = relevant_mask(left_target);
  const auto mask2 = relevant_mask(right_target);
  if (!mask1.back())
    throw InternalError("the moved consequent is not relevant in " + print_sequent(left_target));

  Sequent left_premise{{}, s.succedent};
  Sequent right_premise{{}, principal.lhs()};
  std::vector<Formula> leftover;
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (mask1[j] && mask2[j])
      throw InternalError("relevant sets are not disjoint in " + print_sequent(s));
    if (mask1[j])
      left_premise.antecedent.push_back(gamma[j]);
    else if (mask2[j])
      right_premise.antecedent.push_back(gamma[j]);
    else
      leftover.push_back(gamma[j]);
  }
  left_premise.antecedent.push_back(principal.rhs());

  ProofTree lp = guided(left_premise);
  ProofTree rp = guided(right_premise);
  Sequent conclusion{{}, s.succedent};
  conclusion.antecedent = left_premise.antecedent;
  conclusion.antecedent.pop_back();  // drop F
  conclusion.antecedent.insert(conclusion.antecedent.end(), right_premise.antecedent.begin(),
                               right_premise.antecedent.end());
  conclusion.antecedent.push_back(principal);
  ProofTree combined{conclusion, Rule::LeftImp, {std::move(lp), std::move(rp)}};
  return weaken_proof(combined, leftover);
}

}  // namespace

ProofTree prove_binary_guided(const Sequent& s) {
  if (!is_binary(s)) throw NotBinaryError("not a binary sequent: " + print_sequent(s));
  if (!is_tautology(s))
    throw NotTautologicalError("not a tautological sequent: " + print_sequent(s));
  return guided(s);
}

bool provable_cl7(const Formula& h) { return prove_exhaustive(Sequent{{}, h}).has_value(); }

}  // namespace clt
