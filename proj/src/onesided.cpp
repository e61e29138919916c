#include "clt/onesided.hpp"

#include <algorithm>

#include "clt/errors.hpp"
#include "clt/text.hpp"

namespace clt {

struct NNFFormula::Node {
  Kind kind;
  Atom name;       // literals
  bool positive = true;
  std::vector<NNFFormula> children;
  std::string text;
};

NNFFormula NNFFormula::literal(Atom name, bool positive) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Literal;
  node->positive = positive;
  node->text = positive ? name : "~" + name;
  node->name = std::move(name);
  return NNFFormula(std::move(node));
}

NNFFormula NNFFormula::conj(NNFFormula lhs, NNFFormula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->text = "(" + lhs.text() + " & " + rhs.text() + ")";
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return NNFFormula(std::move(node));
}

NNFFormula NNFFormula::disj(NNFFormula lhs, NNFFormula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->text = "(" + lhs.text() + " | " + rhs.text() + ")";
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return NNFFormula(std::move(node));
}

NNFFormula::Kind NNFFormula::kind() const noexcept { return node_->kind; }
const Atom& NNFFormula::atom_name() const { return node_->name; }
bool NNFFormula::positive() const { return node_->positive; }
const NNFFormula& NNFFormula::lhs() const { return node_->children[0]; }
const NNFFormula& NNFFormula::rhs() const { return node_->children[1]; }
const std::string& NNFFormula::text() const noexcept { return node_->text; }

NNFFormula nnf(const ClassicalFormula& f, Polarity p) {
  const bool pos = p == Polarity::Positive;
  switch (f.kind()) {
    case ClassicalFormula::Kind::Atom:
      return NNFFormula::literal(f.atom_name(), pos);
    case ClassicalFormula::Kind::Neg:
      return nnf(f.inner(), pos ? Polarity::Negative : Polarity::Positive);
    case ClassicalFormula::Kind::Imp:
      // E->F ~> ~E|F; under negation ~(~E|F) ~> E&~F.
      if (pos)
        return NNFFormula::disj(nnf(f.lhs(), Polarity::Negative), nnf(f.rhs(), Polarity::Positive));
      return NNFFormula::conj(nnf(f.lhs(), Polarity::Positive), nnf(f.rhs(), Polarity::Negative));
    case ClassicalFormula::Kind::And:
    case ClassicalFormula::Kind::Or: {
      const bool conj = (f.kind() == ClassicalFormula::Kind::And) == pos;
      const auto& parts = f.parts();
      NNFFormula acc = nnf(parts.back(), p);
      for (std::size_t i = parts.size() - 1; i-- > 0;) {
        NNFFormula left = nnf(parts[i], p);
        acc = conj ? NNFFormula::conj(std::move(left), std::move(acc))
                   : NNFFormula::disj(std::move(left), std::move(acc));
      }
      return acc;
    }
  }
  throw InternalError("unreachable classical kind");
}

NNFFormula nnf(const Formula& f, Polarity p) { return nnf(to_classical(f), p); }

NNFFormula nnf_negate(const NNFFormula& f) {
  switch (f.kind()) {
    case NNFFormula::Kind::Literal:
      return NNFFormula::literal(f.atom_name(), !f.positive());
    case NNFFormula::Kind::And:
      return NNFFormula::disj(nnf_negate(f.lhs()), nnf_negate(f.rhs()));
    case NNFFormula::Kind::Or:
      return NNFFormula::conj(nnf_negate(f.lhs()), nnf_negate(f.rhs()));
  }
  throw InternalError("unreachable NNF kind");
}

ClassicalFormula to_classical(const NNFFormula& f) {
  switch (f.kind()) {
    case NNFFormula::Kind::Literal: {
      ClassicalFormula a = ClassicalFormula::atom(f.atom_name());
      return f.positive() ? a : ClassicalFormula::neg(std::move(a));
    }
    case NNFFormula::Kind::And:
      return ClassicalFormula::conj({to_classical(f.lhs()), to_classical(f.rhs())});
    case NNFFormula::Kind::Or:
      return ClassicalFormula::disj({to_classical(f.lhs()), to_classical(f.rhs())});
  }
  throw InternalError("unreachable NNF kind");
}

OneSidedSequent to_one_sided(const Sequent& s) {
  OneSidedSequent out;
  out.reserve(s.antecedent.size() + 1);
  for (const auto& e : s.antecedent) out.push_back(nnf(e, Polarity::Negative));
  out.push_back(nnf(s.succedent, Polarity::Positive));
  return out;
}

OneSidedProof translate_proof(const ProofTree& t) {
  OneSidedProof out;
  out.conclusion = to_one_sided(t.conclusion);
  switch (t.rule) {
    case Rule::Axiom:
      out.rule = OneSidedRule::Axiom;
      break;
    case Rule::RightImp:
      out.rule = OneSidedRule::RightImp;
      break;
    case Rule::LeftImp:
      out.rule = OneSidedRule::LeftImp;
      break;
    case Rule::Contraction:
      throw Error("contraction proofs have no one-sided translation");
  }
  out.premises.reserve(t.premises.size());
  for (const auto& p : t.premises) out.premises.push_back(translate_proof(p));
  return out;
}

namespace {

bool one_sided_multiset_equal(OneSidedSequent a, OneSidedSequent b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::equal(a.begin(), a.end(), b.begin());
}

bool one_sided_remove_one(OneSidedSequent& ms, const NNFFormula& f) {
  for (auto it = ms.begin(); it != ms.end(); ++it) {
    if (*it == f) {
      ms.erase(it);
      return true;
    }
  }
  return false;
}

void check_one_sided_node(const OneSidedProof& p, const std::string& path,
                          std::vector<Violation>& out) {
  auto bad = [&](const std::string& msg) { out.push_back({path, msg}); };
  const OneSidedSequent& c = p.conclusion;
  switch (p.rule) {
    case OneSidedRule::Axiom: {
      if (!p.premises.empty()) bad("axiom node with premises");
      bool pair_found = false;
      for (const auto& f : c) {
        const NNFFormula dual = nnf_negate(f);
        for (const auto& g : c)
          if (g == dual) pair_found = true;
      }
      if (!pair_found) bad("no complementary pair in " + print_one_sided(c));
      break;
    }
    case OneSidedRule::RightImp: {
      // Gamma, ~E, F  /  Gamma, ~E | F
      if (p.premises.size() != 1) {
        bad("right_imp_1s needs exactly one premise");
        break;
      }
      const OneSidedSequent& prem = p.premises[0].conclusion;
      bool ok = false;
      for (const auto& f : c) {
        if (f.kind() != NNFFormula::Kind::Or) continue;
        OneSidedSequent expected = c;
        one_sided_remove_one(expected, f);
        expected.push_back(f.lhs());
        expected.push_back(f.rhs());
        if (one_sided_multiset_equal(expected, prem)) {
          ok = true;
          break;
        }
      }
      if (!ok) bad("right_imp_1s bookkeeping fails for " + print_one_sided(c));
      break;
    }
    case OneSidedRule::LeftImp: {
      // Gamma, ~F, G  and  Delta, E  /  Gamma, Delta, E & ~F, G
      if (p.premises.size() != 2) {
        bad("left_imp_1s needs exactly two premises");
        break;
      }
      const OneSidedSequent& prem1 = p.premises[0].conclusion;
      const OneSidedSequent& prem2 = p.premises[1].conclusion;
      bool ok = false;
      for (const auto& conj : c) {
        if (ok) break;
        if (conj.kind() != NNFFormula::Kind::And) continue;
        const NNFFormula& e = conj.lhs();
        const NNFFormula& notf = conj.rhs();
        OneSidedSequent delta = prem2;
        if (!one_sided_remove_one(delta, e)) continue;
        OneSidedSequent gamma_g = prem1;
        if (!one_sided_remove_one(gamma_g, notf)) continue;
        // Some member of the reduced first premise is the carried G.
        for (const auto& g : gamma_g) {
          OneSidedSequent gamma = gamma_g;
          one_sided_remove_one(gamma, g);
          OneSidedSequent assembled = gamma;
          assembled.insert(assembled.end(), delta.begin(), delta.end());
          assembled.push_back(conj);
          assembled.push_back(g);
          if (one_sided_multiset_equal(assembled, c)) {
            ok = true;
            break;
          }
        }
      }
      if (!ok) bad("left_imp_1s bookkeeping fails for " + print_one_sided(c));
      break;
    }
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    check_one_sided_node(p.premises[i], path + "." + std::to_string(i), out);
}

}  // namespace

std::vector<Violation> check_one_sided(const OneSidedProof& p) {
  std::vector<Violation> out;
  check_one_sided_node(p, "root", out);
  return out;
}

}  // namespace clt
