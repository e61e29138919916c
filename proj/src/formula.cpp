#include "clt/formula.hpp"

#include <algorithm>
#include <cstdint>

#include "clt/errors.hpp"

namespace clt {

struct Formula::Node {
  Atom name;  // nonempty iff leaf
  std::vector<Formula> children;  // empty for atoms, {lhs, rhs} otherwise
  int connectives = 0;
  std::string text;
};

Formula Formula::atom(Atom name) {
  auto node = std::make_shared<Node>();
  node->text = name;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->connectives = antecedent.connective_count() + consequent.connective_count() + 1;
  if (antecedent.is_atom())
    node->text = antecedent.text() + "->" + consequent.text();
  else
    node->text = "(" + antecedent.text() + ")->" + consequent.text();
  node->children.push_back(std::move(antecedent));
  node->children.push_back(std::move(consequent));
  return Formula(std::move(node));
}

bool Formula::is_atom() const noexcept { return node_->children.empty(); }

const Atom& Formula::atom_name() const { return node_->name; }

const Formula& Formula::lhs() const { return node_->children[0]; }

const Formula& Formula::rhs() const { return node_->children[1]; }

int Formula::connective_count() const noexcept { return node_->connectives; }

const std::string& Formula::text() const noexcept { return node_->text; }

Sequent Sequent::canonical() const {
  Sequent out = *this;
  std::sort(out.antecedent.begin(), out.antecedent.end());
  return out;
}

bool operator==(const Sequent& a, const Sequent& b) {
  return a.succedent == b.succedent && multiset_equal(a.antecedent, b.antecedent);
}

bool multiset_equal(std::vector<Formula> a, std::vector<Formula> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::equal(a.begin(), a.end(), b.begin());
}

bool multiset_remove_one(std::vector<Formula>& ms, const Formula& f) {
  for (auto it = ms.begin(); it != ms.end(); ++it) {
    if (*it == f) {
      ms.erase(it);
      return true;
    }
  }
  return false;
}

struct ClassicalFormula::Node {
  Kind kind;
  Atom name;
  std::vector<ClassicalFormula> parts;  // Neg: 1, Imp: 2, And/Or: n>=1
};

ClassicalFormula ClassicalFormula::atom(Atom name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->name = std::move(name);
  return ClassicalFormula(std::move(node));
}

ClassicalFormula ClassicalFormula::neg(ClassicalFormula inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Neg;
  node->parts.push_back(std::move(inner));
  return ClassicalFormula(std::move(node));
}

ClassicalFormula ClassicalFormula::conj(std::vector<ClassicalFormula> parts) {
  if (parts.empty()) throw InternalError("empty conjunction");
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->parts = std::move(parts);
  return ClassicalFormula(std::move(node));
}

ClassicalFormula ClassicalFormula::disj(std::vector<ClassicalFormula> parts) {
  if (parts.empty()) throw InternalError("empty disjunction");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->parts = std::move(parts);
  return ClassicalFormula(std::move(node));
}

ClassicalFormula ClassicalFormula::implies(ClassicalFormula lhs, ClassicalFormula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Imp;
  node->parts.push_back(std::move(lhs));
  node->parts.push_back(std::move(rhs));
  return ClassicalFormula(std::move(node));
}

ClassicalFormula::Kind ClassicalFormula::kind() const noexcept { return node_->kind; }
const Atom& ClassicalFormula::atom_name() const { return node_->name; }
const ClassicalFormula& ClassicalFormula::inner() const { return node_->parts[0]; }
const std::vector<ClassicalFormula>& ClassicalFormula::parts() const { return node_->parts; }
const ClassicalFormula& ClassicalFormula::lhs() const { return node_->parts[0]; }
const ClassicalFormula& ClassicalFormula::rhs() const { return node_->parts[1]; }

const Atom& head(const Formula& f) {
  const Formula* cur = &f;
  while (!cur->is_atom()) cur = &cur->rhs();
  return cur->atom_name();
}

int occurrences(const Formula& f, const Atom& a) {
  if (f.is_atom()) return f.atom_name() == a ? 1 : 0;
  return occurrences(f.lhs(), a) + occurrences(f.rhs(), a);
}

int occurrences(const Sequent& s, const Atom& a) {
  int n = occurrences(s.succedent, a);
  for (const auto& f : s.antecedent) n += occurrences(f, a);
  return n;
}

namespace {

void count_atoms(const Formula& f, std::map<Atom, int>& counts) {
  if (f.is_atom()) {
    ++counts[f.atom_name()];
    return;
  }
  count_atoms(f.lhs(), counts);
  count_atoms(f.rhs(), counts);
}

}  // namespace

bool is_binary(const Formula& f) {
  std::map<Atom, int> counts;
  count_atoms(f, counts);
  for (const auto& [_, n] : counts)
    if (n > 2) return false;
  return true;
}

bool is_binary(const Sequent& s) {
  std::map<Atom, int> counts;
  count_atoms(s.succedent, counts);
  for (const auto& f : s.antecedent) count_atoms(f, counts);
  for (const auto& [_, n] : counts)
    if (n > 2) return false;
  return true;
}

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  std::map<Atom, int> counts;
  count_atoms(f, counts);
  for (const auto& [a, _] : counts) out.insert(a);
  return out;
}

std::set<Atom> atoms_of(const Sequent& s) {
  std::set<Atom> out = atoms_of(s.succedent);
  for (const auto& f : s.antecedent) {
    auto more = atoms_of(f);
    out.insert(more.begin(), more.end());
  }
  return out;
}

std::set<Atom> atoms_of(const ClassicalFormula& f) {
  std::set<Atom> out;
  switch (f.kind()) {
    case ClassicalFormula::Kind::Atom:
      out.insert(f.atom_name());
      break;
    default:
      for (const auto& part : f.parts()) {
        auto more = atoms_of(part);
        out.insert(more.begin(), more.end());
      }
  }
  return out;
}

Formula substitute(const Formula& f, const Substitution& s) {
  if (f.is_atom()) {
    auto it = s.find(f.atom_name());
    return it == s.end() ? f : it->second;
  }
  return Formula::implies(substitute(f.lhs(), s), substitute(f.rhs(), s));
}

Sequent substitute(const Sequent& seq, const Substitution& s) {
  Sequent out{{}, substitute(seq.succedent, s)};
  out.antecedent.reserve(seq.antecedent.size());
  for (const auto& f : seq.antecedent) out.antecedent.push_back(substitute(f, s));
  return out;
}

namespace {

bool match_rec(const Formula& h, const Formula& b, Substitution& out) {
  if (b.is_atom()) {
    auto [it, inserted] = out.emplace(b.atom_name(), h);
    return inserted || it->second == h;
  }
  if (h.is_atom()) return false;
  return match_rec(h.lhs(), b.lhs(), out) && match_rec(h.rhs(), b.rhs(), out);
}

}  // namespace

std::optional<Substitution> match_instance(const Formula& h, const Formula& b) {
  Substitution out;
  if (!match_rec(h, b, out)) return std::nullopt;
  return out;
}

std::vector<bool> relevant_mask(const Sequent& s) {
  const std::size_t n = s.antecedent.size();
  std::vector<bool> mask(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) continue;
      const Atom& h = head(s.antecedent[i]);
      bool in = occurrences(s.succedent, h) > 0;
      for (std::size_t j = 0; !in && j < n; ++j)
        in = mask[j] && occurrences(s.antecedent[j], h) > 0;
      if (in) {
        mask[i] = true;
        changed = true;
      }
    }
  }
  return mask;
}

std::vector<Formula> relevant_formulas(const Sequent& s) {
  auto mask = relevant_mask(s);
  std::vector<Formula> out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i)
    if (mask[i]) out.push_back(s.antecedent[i]);
  return out;
}

ClassicalFormula to_classical(const Formula& f) {
  if (f.is_atom()) return ClassicalFormula::atom(f.atom_name());
  return ClassicalFormula::implies(to_classical(f.lhs()), to_classical(f.rhs()));
}

ClassicalFormula sequent_to_formula(const Sequent& s) {
  ClassicalFormula succ = to_classical(s.succedent);
  if (s.antecedent.empty()) return succ;
  if (s.antecedent.size() == 1) return ClassicalFormula::implies(to_classical(s.antecedent[0]), succ);
  std::vector<ClassicalFormula> parts;
  parts.reserve(s.antecedent.size());
  for (const auto& f : s.antecedent) parts.push_back(to_classical(f));
  return ClassicalFormula::implies(ClassicalFormula::conj(std::move(parts)), succ);
}

bool eval(const ClassicalFormula& f, const Assignment& a) {
  switch (f.kind()) {
    case ClassicalFormula::Kind::Atom: {
      auto it = a.find(f.atom_name());
      if (it == a.end()) throw EvalError("unassigned atom " + f.atom_name());
      return it->second;
    }
    case ClassicalFormula::Kind::Neg:
      return !eval(f.inner(), a);
    case ClassicalFormula::Kind::And:
      for (const auto& part : f.parts())
        if (!eval(part, a)) return false;
      return true;
    case ClassicalFormula::Kind::Or:
      for (const auto& part : f.parts())
        if (eval(part, a)) return true;
      return false;
    case ClassicalFormula::Kind::Imp:
      return !eval(f.lhs(), a) || eval(f.rhs(), a);
  }
  throw InternalError("unreachable formula kind");
}

bool is_tautology(const ClassicalFormula& f) {
  const auto atom_set = atoms_of(f);
  std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
  const std::size_t k = atoms.size();
  if (k > 24) throw Error("truth table over " + std::to_string(k) + " atoms refused");
  Assignment a;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    for (std::size_t i = 0; i < k; ++i) a[atoms[i]] = (bits >> i) & 1;
    if (!eval(f, a)) return false;
  }
  return true;
}

bool is_tautology(const Formula& f) { return is_tautology(to_classical(f)); }

bool is_tautology(const Sequent& s) { return is_tautology(sequent_to_formula(s)); }

}  // namespace clt
