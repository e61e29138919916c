#include <doctest.h>

#include <random>

#include "clt/cl7.hpp"
#include "clt/errors.hpp"
#include "clt/onesided.hpp"
#include "clt/text.hpp"
#include "support.hpp"

using namespace clt;

namespace {

void assert_nnf_shape(const NNFFormula& f) {
  switch (f.kind()) {
    case NNFFormula::Kind::Literal:
      break;
    case NNFFormula::Kind::And:
    case NNFFormula::Kind::Or:
      assert_nnf_shape(f.lhs());
      assert_nnf_shape(f.rhs());
      break;
  }
}

}  // namespace

TEST_CASE("nnf applies the four rewrites") {
  CHECK(print_nnf(nnf(parse_formula("P->P"), Polarity::Positive)) == "(~P | P)");
  CHECK(print_nnf(nnf(parse_formula("P->Q"), Polarity::Negative)) == "(P & ~Q)");
  CHECK(print_nnf(nnf(parse_formula("P->(Q->P)"), Polarity::Positive)) == "(~P | (~Q | P))");
}

TEST_CASE("nnf fixes already-normal classical inputs") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    Formula f = testsupport::random_formula(rng, {"P", "Q", "R"}, static_cast<int>(rng() % 5));
    NNFFormula normal = nnf(f, Polarity::Positive);
    CHECK(nnf(to_classical(normal), Polarity::Positive) == normal);
    CHECK(nnf_negate(normal) == nnf(f, Polarity::Negative));
    CHECK(nnf_negate(nnf_negate(normal)) == normal);
  }
}

TEST_CASE("to_one_sided negates the antecedent") {
  CHECK(print_one_sided(to_one_sided(parse_sequent("P => P"))) == "~P, P");
  CHECK(print_one_sided(to_one_sided(parse_sequent("=> P->P"))) == "(~P | P)");
  CHECK(print_one_sided(to_one_sided(parse_sequent("P->Q, P => Q"))) == "(P & ~Q), ~P, Q");
}

TEST_CASE("to_one_sided preserves the total atom occurrence count") {
  std::mt19937_64 rng(43);
  auto nnf_atoms = [](const NNFFormula& f, auto&& self) -> int {
    if (f.kind() == NNFFormula::Kind::Literal) return 1;
    return self(f.lhs(), self) + self(f.rhs(), self);
  };
  for (int i = 0; i < 300; ++i) {
    Sequent s = testsupport::random_sequent(rng, {"P", "Q"}, 3, 3);
    int before = 0;
    for (const auto& a : atoms_of(s)) before += occurrences(s, a);
    int after = 0;
    for (const auto& f : to_one_sided(s)) after += nnf_atoms(f, nnf_atoms);
    CHECK(before == after);
  }
}

TEST_CASE("translate_proof maps the three rules and rejects contraction") {
  ProofTree axiom{parse_sequent("Q, P => P"), Rule::Axiom, {}};
  OneSidedProof ax = translate_proof(axiom);
  CHECK(ax.rule == OneSidedRule::Axiom);
  CHECK(print_one_sided(ax.conclusion) == "~Q, ~P, P");
  CHECK(check_one_sided(ax).empty());

  auto right = prove_exhaustive(parse_sequent("=> P->P"));
  REQUIRE(right.has_value());
  OneSidedProof r1 = translate_proof(*right);
  CHECK(print_one_sided(r1.conclusion) == "(~P | P)");
  CHECK(check_one_sided(r1).empty());

  auto left = prove_exhaustive(parse_sequent("P->Q, P => Q"));
  REQUIRE(left.has_value());
  OneSidedProof l1 = translate_proof(*left);
  CHECK(l1.rule == OneSidedRule::LeftImp);
  CHECK(l1.premises.size() == 2);
  CHECK(check_one_sided(l1).empty());

  ProofTree contraction{parse_sequent("P => P"),
                        Rule::Contraction,
                        {ProofTree{parse_sequent("P, P => P"), Rule::Axiom, {}}}};
  CHECK_THROWS_AS(translate_proof(contraction), Error);
}

TEST_CASE("check_one_sided rejects sequents without complementary pairs") {
  OneSidedProof good{parse_one_sided("~P, P"), OneSidedRule::Axiom, {}};
  CHECK(check_one_sided(good).empty());
  OneSidedProof bad{parse_one_sided("P, Q"), OneSidedRule::Axiom, {}};
  CHECK_FALSE(check_one_sided(bad).empty());
}

TEST_CASE("translations of proved sequents always check") {
  std::mt19937_64 rng(47);
  int translated = 0;
  for (int i = 0; i < 300; ++i) {
    Sequent s = testsupport::random_sequent(rng, {"P", "Q"}, 3, 2);
    auto proof = prove_exhaustive(s);
    if (!proof) continue;
    ++translated;
    OneSidedProof translated_proof = translate_proof(*proof);
    CHECK(check_one_sided(translated_proof).empty());
    OneSidedSequent expected = to_one_sided(proof->conclusion);
    auto sorted = [](OneSidedSequent v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(translated_proof.conclusion) == sorted(expected));
    for (const auto& f : translated_proof.conclusion) assert_nnf_shape(f);
  }
  CHECK(translated > 30);
}
