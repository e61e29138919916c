#include <doctest.h>

#include <random>

#include "clt/intcalc.hpp"
#include "clt/oracle.hpp"
#include "clt/text.hpp"
#include "support.hpp"

using namespace clt;

TEST_CASE("int_provable separates contraction from CL7") {
  CHECK(int_provable(parse_sequent("=> (P->(P->Q))->(P->Q)")));
  CHECK_FALSE(int_provable(parse_sequent("=> ((P->Q)->P)->P")));  // Peirce
  CHECK(int_provable(parse_sequent("=> P->P")));
}

TEST_CASE("int_prove returns checking Int proofs") {
  auto with_contraction = int_prove(parse_sequent("=> (P->(P->Q))->(P->Q)"));
  REQUIRE(with_contraction.has_value());
  CHECK(with_contraction->conclusion == parse_sequent("=> (P->(P->Q))->(P->Q)"));
  CHECK(check_proof(*with_contraction, System::Int).empty());
  int contractions = 0;
  auto count = [&](const ProofTree& t, auto&& self) -> void {
    if (t.rule == Rule::Contraction) ++contractions;
    for (const auto& p : t.premises) self(p, self);
  };
  count(*with_contraction, count);
  CHECK(contractions >= 1);

  auto plain = int_prove(parse_sequent("=> P->P"));
  REQUIRE(plain.has_value());
  contractions = 0;
  count(*plain, count);
  CHECK(contractions == 0);

  CHECK_FALSE(int_prove(parse_sequent("=> ((P->Q)->P)->P")).has_value());
}

TEST_CASE("int proofs conclude the input multiset, duplicates preserved") {
  Sequent s = parse_sequent("P, P, P->Q => Q");
  auto proof = int_prove(s);
  REQUIRE(proof.has_value());
  CHECK(proof->conclusion == s);
  CHECK(check_proof(*proof, System::Int).empty());
}

TEST_CASE("Int extends CL7 and the search stays inside its key space") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Sequent s = testsupport::random_sequent(rng, {"P", "Q"}, 3, 3);
    IntSearchStats stats;
    const bool by_int = int_provable(s, &stats);
    CHECK(stats.visited_keys <= stats.key_space_bound);
    if (prove_exhaustive(s).has_value()) CHECK(by_int);
    if (by_int) {
      auto proof = int_prove(s);
      REQUIRE(proof.has_value());
      CHECK(proof->conclusion == s);
      CHECK(check_proof(*proof, System::Int).empty());
    }
  }
}

namespace {

// Independent reference: backward search in the terminating
// contraction-free calculus whose left rule splits on the shape of the
// principal's antecedent. Every rule shrinks a weight, so plain
// recursion decides provability with no loop detection.
bool g4ip_provable(std::vector<Formula> antecedent, Formula succedent) {
  std::sort(antecedent.begin(), antecedent.end());
  antecedent.erase(std::unique(antecedent.begin(), antecedent.end()), antecedent.end());

  if (!succedent.is_atom()) {
    antecedent.push_back(succedent.lhs());
    return g4ip_provable(std::move(antecedent), succedent.rhs());
  }
  for (const auto& f : antecedent)
    if (f == succedent) return true;

  for (std::size_t i = 0; i < antecedent.size(); ++i) {
    const Formula principal = antecedent[i];
    if (principal.is_atom()) continue;
    std::vector<Formula> rest = antecedent;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const Formula& x = principal.lhs();
    const Formula& b = principal.rhs();
    if (x.is_atom()) {
      // Usable only when its atomic antecedent is already present.
      bool present = false;
      for (const auto& f : rest) present = present || f == x;
      if (!present) continue;
      std::vector<Formula> next = rest;
      next.push_back(b);
      if (g4ip_provable(std::move(next), succedent)) return true;
    } else {
      // x = c -> d: premises  rest, d->b => x  and  rest, b => G.
      std::vector<Formula> first = rest;
      first.push_back(Formula::implies(x.rhs(), b));
      std::vector<Formula> second = rest;
      second.push_back(b);
      if (g4ip_provable(std::move(first), x) &&
          g4ip_provable(std::move(second), succedent))
        return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("int_provable agrees with an independent terminating calculus") {
  for (const auto& h : enumerate_formulas({"P", "Q"}, 5)) {
    CAPTURE(h.text());
    CHECK(int_provable(Sequent{{}, h}) == g4ip_provable({}, h));
  }
  std::mt19937_64 rng(53);
  for (int i = 0; i < 500; ++i) {
    Sequent s = testsupport::random_sequent(rng, {"P", "Q", "R"}, 3, 3);
    CAPTURE(print_sequent(s));
    CHECK(int_provable(s) == g4ip_provable(s.antecedent, s.succedent));
  }
}

TEST_CASE("set-collapse soundness: duplicating antecedent entries changes nothing") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    Sequent s = testsupport::random_sequent(rng, {"P", "Q", "R"}, 3, 2);
    if (s.antecedent.empty()) continue;
    Sequent doubled = s;
    doubled.antecedent.push_back(s.antecedent[rng() % s.antecedent.size()]);
    CHECK(int_provable(s) == int_provable(doubled));
  }
}
