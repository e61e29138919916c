#include <doctest.h>

#include "clt/cl7.hpp"
#include "clt/errors.hpp"
#include "clt/jsonio.hpp"
#include "clt/onesided.hpp"
#include "clt/text.hpp"
#include "game_fixtures.hpp"

using namespace clt;
using namespace clt::testsupport;

TEST_CASE("proof documents round-trip byte-identically") {
  auto proof = prove_exhaustive(parse_sequent("P => P"));
  REQUIRE(proof.has_value());
  std::string doc = serialize_proof(*proof);
  CHECK(doc.find("\"format\": \"cl-toolkit/1\"") != std::string::npos);
  ProofTree back = deserialize_proof(doc);
  CHECK(back.conclusion == proof->conclusion);
  CHECK(serialize_proof(back) == doc);

  auto bigger = prove_exhaustive(parse_sequent("P->Q, Q->R, P => R"));
  REQUIRE(bigger.has_value());
  CHECK(serialize_proof(deserialize_proof(serialize_proof(*bigger))) ==
        serialize_proof(*bigger));
}

TEST_CASE("one-sided proof documents round-trip") {
  auto proof = prove_exhaustive(parse_sequent("P->Q, P => Q"));
  REQUIRE(proof.has_value());
  OneSidedProof translated = translate_proof(*proof);
  std::string doc = serialize_one_sided_proof(translated);
  OneSidedProof back = deserialize_one_sided_proof(doc);
  CHECK(serialize_one_sided_proof(back) == doc);
  CHECK(check_one_sided(back).empty());
}

TEST_CASE("run documents validate player tags") {
  Run r{{Player::Environment, "1.q"}, {Player::Machine, "1.yes"}};
  std::string doc = serialize_run(r);
  CHECK(deserialize_run(doc) == r);
  CHECK(serialize_run(deserialize_run(doc)) == doc);

  CHECK_THROWS_AS(
      deserialize_run(R"({"format":"cl-toolkit/1","moves":[{"player":"X","move":"q"}]})"),
      SchemaError);
  CHECK_THROWS_AS(
      deserialize_run(R"({"format":"cl-toolkit/1","moves":[{"player":"T"}]})"), SchemaError);
  CHECK_THROWS_AS(deserialize_run(R"({"moves":[]})"), SchemaError);
}

TEST_CASE("unknown keys are rejected with a path") {
  try {
    deserialize_proof(
        R"({"format":"cl-toolkit/1","rule":"axiom","sequent":"P => P","premises":[],"extra":1})");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("extra") != std::string::npos);
  }
  try {
    deserialize_proof(
        R"({"format":"cl-toolkit/1","rule":"axiom","sequent":"P => P","premises":[{"rule":"bogus","sequent":"P => P","premises":[]}]})");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "/premises/0/rule");
  }
}

TEST_CASE("game descriptions build combinator games") {
  const std::string doc = R"({
    "format": "cl-toolkit/1",
    "op": "brec",
    "arg": {
      "op": "atomic",
      "winner": "T",
      "edges": [
        {"player": "B", "move": "q", "next": {
          "winner": "B",
          "edges": [
            {"player": "T", "move": "yes", "next": {"winner": "T", "edges": []}},
            {"player": "T", "move": "no", "next": {"winner": "B", "edges": []}}
          ]
        }}
      ]
    }
  })";
  Game g = deserialize_game(doc);
  Game reference = brec(qa_game());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Run r = random_legal_run(reference, 8, seed);
    CHECK(adjudicate(g, r) == adjudicate(reference, r));
  }
  std::string normalized = normalize_game_description(doc);
  CHECK(normalize_game_description(normalized) == normalized);

  CHECK_THROWS_AS(deserialize_game(R"({"format":"cl-toolkit/1","op":"spin"})"), SchemaError);
  CHECK_THROWS_AS(deserialize_game(R"({"format":"cl-toolkit/1","op":"pand","args":[]})"),
                  SchemaError);
  CHECK_THROWS_AS(
      deserialize_game(R"({"format":"cl-toolkit/1","op":"neg","arg":{"op":"atomic","winner":"T"},"spare":0})"),
      SchemaError);
}
