#include <doctest.h>

#include <set>

#include "clt/cl7.hpp"
#include "clt/oracle.hpp"
#include "clt/text.hpp"

using namespace clt;

TEST_CASE("enumerate_formulas: documented order, exact counts, no duplicates") {
  auto one_atom_0 = enumerate_formulas({"P"}, 0);
  REQUIRE(one_atom_0.size() == 1);
  CHECK(one_atom_0[0].text() == "P");

  auto one_atom_1 = enumerate_formulas({"P"}, 1);
  REQUIRE(one_atom_1.size() == 2);
  CHECK(one_atom_1[0].text() == "P");
  CHECK(one_atom_1[1].text() == "P->P");

  auto two_atoms_1 = enumerate_formulas({"P", "Q"}, 1);
  CHECK(two_atoms_1.size() == 6);  // 2 atoms + 2*2 implications

  auto stream = enumerate_formulas({"P", "Q"}, 4);
  std::set<std::string> seen;
  int last_size = 0;
  for (const auto& f : stream) {
    CHECK(seen.insert(f.text()).second);
    CHECK(f.connective_count() >= last_size);
    last_size = f.connective_count();
  }
}

TEST_CASE("enumerate_binary_tautologies filters by binarity and truth") {
  auto bt = enumerate_binary_tautologies({"P", "Q"}, 2);
  std::set<std::string> texts;
  for (const auto& f : bt) texts.insert(f.text());
  CHECK(texts.count("P->P"));
  CHECK(texts.count("P->Q->P"));
  CHECK_FALSE(texts.count("(P->(P->Q))->(P->Q)"));
  for (const auto& f : bt) {
    CHECK(is_binary(f));
    CHECK(is_tautology(f));
  }
}

TEST_CASE("binary_anti_instance returns valid witnesses") {
  auto self = binary_anti_instance(parse_formula("P->P"));
  REQUIRE(self.has_value());
  CHECK(self->template_formula.text() == "P->P");
  CHECK(substitute(self->template_formula, self->substitution) == parse_formula("P->P"));

  auto shared = binary_anti_instance(parse_formula("(P->Q)->(P->Q)"));
  REQUIRE(shared.has_value());
  CHECK(is_binary(shared->template_formula));
  CHECK(is_tautology(shared->template_formula));
  CHECK(substitute(shared->template_formula, shared->substitution) ==
        parse_formula("(P->Q)->(P->Q)"));

  CHECK_FALSE(binary_anti_instance(parse_formula("(P->(P->Q))->(P->Q)")).has_value());
}

TEST_CASE("instance verdicts on the named formulas") {
  CHECK(is_instance_of_binary_tautology(parse_formula("P->(Q->P)")));
  CHECK(is_instance_of_binary_tautology(parse_formula("((P->P)->Q)->Q")));
  CHECK_FALSE(is_instance_of_binary_tautology(parse_formula("((P->Q)->P)->P")));
}

TEST_CASE("refinement stability: binary formulas reduce to their own truth table") {
  for (const auto& f : enumerate_formulas({"P", "Q"}, 3)) {
    if (!is_binary(f)) continue;
    CHECK(is_instance_of_binary_tautology(f) == is_tautology(f));
  }
}

TEST_CASE("witness determinism") {
  auto a = binary_anti_instance(parse_formula("(P->Q)->((R->P)->(R->Q))"));
  auto b = binary_anti_instance(parse_formula("(P->Q)->((R->P)->(R->Q))"));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->template_formula == b->template_formula);
  CHECK(a->cut == b->cut);
}
