#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clt/formula.hpp"

namespace clt::testsupport {

// Seeded random ->-formula over the given atoms with exactly the asked
// connective count.
inline Formula random_formula(std::mt19937_64& rng, const std::vector<Atom>& atoms,
                              int connectives) {
  if (connectives == 0) return Formula::atom(atoms[rng() % atoms.size()]);
  const int left = static_cast<int>(rng() % static_cast<std::uint64_t>(connectives));
  return Formula::implies(random_formula(rng, atoms, left),
                          random_formula(rng, atoms, connectives - 1 - left));
}

inline Sequent random_sequent(std::mt19937_64& rng, const std::vector<Atom>& atoms,
                              std::size_t max_antecedent, int max_connectives) {
  const std::size_t n = rng() % (max_antecedent + 1);
  Sequent s{{}, random_formula(rng, atoms, static_cast<int>(rng() % (max_connectives + 1)))};
  for (std::size_t i = 0; i < n; ++i)
    s.antecedent.push_back(random_formula(rng, atoms, static_cast<int>(rng() % (max_connectives + 1))));
  return s;
}

}  // namespace clt::testsupport
