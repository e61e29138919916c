#include "clt/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "clt/cl7.hpp"
#include "clt/errors.hpp"

namespace clt {

FormulaEnumerator::FormulaEnumerator(std::vector<Atom> atoms, int max_connectives)
    : atoms_(std::move(atoms)), max_connectives_(max_connectives) {
  if (atoms_.empty()) throw InternalError("enumeration over an empty atom list");
}

const std::vector<Formula>& FormulaEnumerator::pool(int size) {
  while (static_cast<int>(by_size_.size()) <= size) {
    const int m = static_cast<int>(by_size_.size());
    std::vector<Formula> level;
    if (m == 0) {
      for (const auto& a : atoms_) level.push_back(Formula::atom(a));
    } else {
      for (int ls = 0; ls < m; ++ls) {
        const auto& lefts = by_size_[static_cast<std::size_t>(ls)];
        const auto& rights = by_size_[static_cast<std::size_t>(m - 1 - ls)];
        for (const auto& l : lefts)
          for (const auto& r : rights) level.push_back(Formula::implies(l, r));
      }
    }
    by_size_.push_back(std::move(level));
  }
  return by_size_[static_cast<std::size_t>(size)];
}

std::optional<Formula> FormulaEnumerator::next() {
  while (size_ <= max_connectives_) {
    const auto& level = pool(size_);
    if (index_ < level.size()) return level[index_++];
    index_ = 0;
    ++size_;
  }
  return std::nullopt;
}

std::vector<Formula> enumerate_formulas(const std::vector<Atom>& atoms, int max_connectives) {
  FormulaEnumerator en(atoms, max_connectives);
  std::vector<Formula> out;
  while (auto f = en.next()) out.push_back(std::move(*f));
  return out;
}

std::vector<Formula> enumerate_binary_tautologies(const std::vector<Atom>& atoms,
                                                  int max_connectives) {
  FormulaEnumerator en(atoms, max_connectives);
  std::vector<Formula> out;
  while (auto f = en.next())
    if (is_binary(*f) && is_tautology(*f)) out.push_back(std::move(*f));
  return out;
}

namespace {

const Formula& subformula_at(const Formula& f, const std::string& path) {
  const Formula* cur = &f;
  for (char step : path) cur = step == '0' ? &cur->lhs() : &cur->rhs();
  return *cur;
}

// All antichains of subtree positions covering every leaf, whole-node
// cut first, then splits.
void collect_cuts(const Formula& f, const std::string& path,
                  std::vector<std::vector<std::string>>& out) {
  out.push_back({path});
  if (f.is_atom()) return;
  std::vector<std::vector<std::string>> lefts;
  std::vector<std::vector<std::string>> rights;
  collect_cuts(f.lhs(), path + "0", lefts);
  collect_cuts(f.rhs(), path + "1", rights);
  for (const auto& l : lefts) {
    for (const auto& r : rights) {
      std::vector<std::string> combined = l;
      combined.insert(combined.end(), r.begin(), r.end());
      out.push_back(std::move(combined));
    }
  }
}

struct GroupingSearch {
  const Formula& h;
  const std::vector<std::string>& cut;
  const std::set<Atom>& formula_atoms;
  std::vector<Formula> point_formulas;
  std::vector<std::vector<int>> classes;  // member positions per class

  std::optional<Abstraction> found;

  // Template atom names: the original atom name when a class holds an
  // atom and the name is still free, else fresh X0, X1, ...
  std::vector<Atom> class_names() const {
    std::set<Atom> taken;
    std::vector<Atom> names;
    for (const auto& cls : classes) {
      const Formula& sub = point_formulas[static_cast<std::size_t>(cls[0])];
      Atom name;
      if (sub.is_atom() && !taken.count(sub.atom_name())) {
        name = sub.atom_name();
      } else {
        for (int i = 0;; ++i) {
          Atom candidate = "X" + std::to_string(i);
          if (!taken.count(candidate) && !formula_atoms.count(candidate)) {
            name = candidate;
            break;
          }
        }
      }
      taken.insert(name);
      names.push_back(name);
    }
    return names;
  }

  Formula build_template(const Formula& f, const std::string& path,
                         const std::map<std::string, Atom>& cut_names) const {
    auto it = cut_names.find(path);
    if (it != cut_names.end()) return Formula::atom(it->second);
    return Formula::implies(build_template(f.lhs(), path + "0", cut_names),
                            build_template(f.rhs(), path + "1", cut_names));
  }

  void finish() {
    const auto names = class_names();
    std::map<std::string, Atom> cut_names;
    Substitution sub;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int pos : classes[c]) cut_names[cut[static_cast<std::size_t>(pos)]] = names[c];
      sub.emplace(names[c], point_formulas[static_cast<std::size_t>(classes[c][0])]);
    }
    Formula tmpl = build_template(h, "", cut_names);
    if (!is_tautology(tmpl)) return;
    if (!is_binary(tmpl)) throw InternalError("grouped template is not binary");
    if (!(substitute(tmpl, sub) == h)) throw InternalError("witness does not reproduce the formula");
    found = Abstraction{std::move(tmpl), std::move(sub), cut};
  }

  void assign(std::size_t i) {
    if (found) return;
    if (i == cut.size()) {
      finish();
      return;
    }
    // Merging with an earlier singleton class of the same subformula is
    // tried before opening a fresh class.
    for (std::size_t c = 0; c < classes.size() && !found; ++c) {
      if (classes[c].size() != 1) continue;
      if (!(point_formulas[static_cast<std::size_t>(classes[c][0])] == point_formulas[i])) continue;
      classes[c].push_back(static_cast<int>(i));
      assign(i + 1);
      classes[c].pop_back();
    }
    if (found) return;
    classes.push_back({static_cast<int>(i)});
    assign(i + 1);
    classes.pop_back();
  }
};

}  // namespace

std::optional<Abstraction> binary_anti_instance(const Formula& h) {
  std::vector<std::vector<std::string>> cuts;
  collect_cuts(h, "", cuts);
  const std::set<Atom> formula_atoms = atoms_of(h);
  for (const auto& cut : cuts) {
    GroupingSearch search{h, cut, formula_atoms, {}, {}, std::nullopt};
    search.point_formulas.reserve(cut.size());
    for (const auto& path : cut) search.point_formulas.push_back(subformula_at(h, path));
    search.assign(0);
    if (search.found) return search.found;
  }
  return std::nullopt;
}

bool is_instance_of_binary_tautology(const Formula& h) {
  return binary_anti_instance(h).has_value();
}

std::optional<ProofTree> prove_via_abstraction(const Formula& h) {
  auto witness = binary_anti_instance(h);
  if (!witness) return std::nullopt;
  ProofTree base = prove_binary_guided(Sequent{{}, witness->template_formula});
  return substitute_proof(base, witness->substitution);
}

}  // namespace clt
