#include <doctest.h>

#include "clt/errors.hpp"
#include "clt/game.hpp"
#include "game_fixtures.hpp"

using namespace clt;
using namespace clt::testsupport;

namespace {

Run run_of(std::initializer_list<std::pair<char, const char*>> moves) {
  Run r;
  for (const auto& [tag, move] : moves) r.push_back({*player_from_tag(tag), move});
  return r;
}

}  // namespace

TEST_CASE("atomic games read edges and terminal winners") {
  Game qa = qa_game();
  CHECK(qa.winner({}) == Player::Machine);
  CHECK(qa.winner(run_of({{'B', "q"}})) == Player::Environment);
  CHECK(qa.winner(run_of({{'B', "q"}, {'T', "yes"}})) == Player::Machine);
  // "good" is not an edge: the machine made the first illegal move.
  CHECK(adjudicate(qa, run_of({{'B', "q"}, {'T', "good"}})) == Player::Environment);
  CHECK(qa.is_legal_move({}, Player::Environment, "q"));
  CHECK_FALSE(qa.is_legal_move({}, Player::Machine, "q"));

  GameTree dup{Player::Machine,
               {{Player::Machine, "m", GameTree{}}, {Player::Machine, "m", GameTree{}}}};
  CHECK_THROWS_AS(atomic_game(dup), Error);
}

TEST_CASE("neg flips labels and winners") {
  CHECK(neg_run(run_of({{'B', "q"}, {'T', "a"}})) == run_of({{'T', "q"}, {'B', "a"}}));
  Game qa = qa_game();
  CHECK(neg(qa).winner({}) == Player::Environment);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Run r = random_legal_run(neg(neg(qa)), 4, seed);
    CHECK(adjudicate(neg(neg(qa)), r) == adjudicate(qa, r));
  }
}

TEST_CASE("arrow plays the antecedent upside down") {
  Game a = arrow(qa_game(), qa_game());
  CHECK(a.winner({}) == Player::Machine);  // the unasked consequent is machine-won

  // Machine answers correctly in the consequent only.
  Run consequent_win = run_of({{'B', "1.q"}, {'T', "1.yes"}});
  CHECK(is_legal_run(a, consequent_win));
  CHECK(adjudicate(a, consequent_win) == Player::Machine);

  // Environment answers wrongly in the antecedent: machine wins
  // regardless of the abandoned consequent question.
  Run counterquestion = run_of({{'B', "1.q"}, {'T', "0.q"}, {'B', "0.no"}});
  CHECK(is_legal_run(a, counterquestion));
  CHECK(adjudicate(a, counterquestion) == Player::Machine);

  // Consequent question left unanswered, antecedent answered correctly.
  Run abandoned = run_of({{'B', "1.q"}, {'T', "0.q"}, {'B', "0.yes"}});
  CHECK(adjudicate(a, abandoned) == Player::Environment);
}

TEST_CASE("proj_component keeps the literal prefix") {
  Run r = run_of({{'T', "1.x"}, {'B', "0.y"}});
  CHECK(proj_component(r, "1.") == run_of({{'T', "x"}}));
  CHECK(proj_component({}, "1.").empty());
  CHECK(proj_component(run_of({{'B', "0.y"}}), "1.").empty());
  CHECK(proj_component(run_of({{'B', "12.y"}}), "1.").empty());
}

TEST_CASE("pand and por combine component winners") {
  Game both = pand({won_game(), lost_game()});
  Game either = por({won_game(), lost_game()});
  CHECK(both.winner({}) == Player::Environment);
  CHECK(either.winner({}) == Player::Machine);
  CHECK_FALSE(both.is_legal_move({}, Player::Environment, "2.q"));

  Game lhs = neg(pand({qa_game(), tug_game()}));
  Game rhs = por({neg(qa_game()), neg(tug_game())});
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Run r = random_legal_run(lhs, 6, seed);
    CHECK(adjudicate(lhs, r) == adjudicate(rhs, r));
  }
}

TEST_CASE("choice games: selection or forfeit") {
  Game cc = choice_conj({qa_game(), won_game()});
  Game cd = choice_disj({qa_game(), won_game()});
  CHECK(cc.winner({}) == Player::Machine);
  CHECK(cd.winner({}) == Player::Environment);

  Run pick = run_of({{'B', "0"}, {'B', "q"}, {'T', "yes"}});
  CHECK(is_legal_run(cc, pick));
  CHECK(adjudicate(cc, pick) == Player::Machine);
  CHECK_FALSE(cc.is_legal_move({}, Player::Machine, "0"));
  CHECK_FALSE(cc.is_legal_move({}, Player::Environment, "2"));
  CHECK(cd.is_legal_move({}, Player::Machine, "1"));
}

TEST_CASE("prec adjudicates touched components and the empty-run baseline") {
  Game p = prec(qa_game());
  CHECK(p.winner({}) == Player::Machine);

  Run lost_component = run_of({{'B', "3.q"}});
  CHECK(is_legal_run(p, lost_component));
  CHECK(adjudicate(p, lost_component) == Player::Environment);

  Run recovered = run_of({{'B', "3.q"}, {'T', "3.yes"}, {'B', "0.q"}, {'T', "0.yes"}});
  CHECK(adjudicate(p, recovered) == Player::Machine);

  Game hopeless = prec(lost_game());
  CHECK(hopeless.winner({}) == Player::Environment);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(adjudicate(hopeless, random_legal_run(hopeless, 5, seed)) == Player::Environment);
}

TEST_CASE("active nodes grow with replicative moves") {
  CHECK(active_nodes({}) == std::set<BitString>{""});
  Run one = run_of({{'B', ":"}});
  CHECK(active_nodes(one) == std::set<BitString>{"", "0", "1"});
  Run two = run_of({{'B', ":"}, {'B', "0:"}});
  CHECK(active_nodes(two) == std::set<BitString>{"", "0", "1", "00", "01"});
  SplitTree tree = split_tree(two);
  CHECK(tree.leaves == std::vector<BitString>{"00", "01", "1"});
}

TEST_CASE("proj_thread follows initial segments") {
  Run r = run_of({{'T', ".a"}, {'B', "0.b"}});
  CHECK(proj_thread(r, UltimatelyPeriodicBitString{"0", "0"}) ==
        run_of({{'T', "a"}, {'B', "b"}}));
  CHECK(proj_thread(r, UltimatelyPeriodicBitString{"1", "0"}) == run_of({{'T', "a"}}));
  CHECK(proj_thread({}, UltimatelyPeriodicBitString{"", "01"}).empty());
  CHECK(proj_thread(r, BitString("0")) == run_of({{'T', "a"}, {'B', "b"}}));
}

TEST_CASE("brec legality: replication is the environment's, once per node") {
  Game g = brec(qa_game());
  CHECK(g.winner({}) == Player::Machine);

  CHECK_FALSE(g.is_legal_move({}, Player::Machine, ":"));
  auto off = first_offence(g, run_of({{'T', ":"}}));
  REQUIRE(off.has_value());
  CHECK(off->index == 0);
  CHECK(off->offender == Player::Machine);

  Run duplicate = run_of({{'B', ":"}, {'B', ":"}});
  auto dup = first_offence(g, duplicate);
  REQUIRE(dup.has_value());
  CHECK(dup->index == 1);
  CHECK(dup->offender == Player::Environment);

  CHECK_FALSE(g.is_legal_move({}, Player::Environment, "0:"));  // inactive node
  CHECK_FALSE(g.is_legal_move({}, Player::Environment, "0.q"));
}

TEST_CASE("brec winner needs every leaf thread") {
  Game g = brec(qa_game());
  Run split_then_split_threads = run_of({
      {'B', ".q"},      // question in the root thread
      {'B', ":"},       // split into 0 and 1
      {'T', "0.yes"},   // answer only in thread 0
  });
  CHECK(is_legal_run(g, split_then_split_threads));
  CHECK(adjudicate(g, split_then_split_threads) == Player::Environment);

  Run both_answered = run_of({
      {'B', ".q"}, {'B', ":"}, {'T', "0.yes"}, {'T', "1.yes"},
  });
  CHECK(adjudicate(g, both_answered) == Player::Machine);
  CHECK(adjudicate(brec_countable(qa_game()), both_answered) == Player::Machine);
}

TEST_CASE("the propagation condition quantifies over leaves below the node") {
  Game g = brec(qa_game());
  Run r = run_of({{'B', ":"}, {'B', "0.q"}, {'T', "0.yes"}});
  // Thread 0 is answered; a root-thread question must be legal in both
  // leaf threads, and the root answer propagates to thread 1 only if
  // legal in thread 0 too ("yes" was already played there).
  CHECK(g.is_legal_move(r, Player::Environment, "1.q"));
  CHECK_FALSE(g.is_legal_move(r, Player::Environment, ".q"));
}

TEST_CASE("legal brec runs project to legal inner runs at every leaf") {
  Game inner = qa_game();
  Game g = brec(inner);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Run r = random_legal_run(g, 12, seed);
    for (const auto& leaf : split_tree(r).leaves)
      CHECK(is_legal_run(inner, proj_thread(r, leaf)));
  }
}

TEST_CASE("reductions are literal compositions") {
  Game direct = reduce_b(qa_game(), qa_game());
  Game composed = arrow(brec(qa_game()), qa_game());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Run r = random_legal_run(direct, 8, seed);
    CHECK(is_legal_run(composed, r));
    CHECK(adjudicate(direct, r) == adjudicate(composed, r));
  }
  CHECK(reduce_p(qa_game(), qa_game()).winner({}) == Player::Machine);
  CHECK(reduce_bc(lost_game(), lost_game()).winner({}) == Player::Machine);
}

TEST_CASE("adjudicate charges the offender") {
  Game g = brec(qa_game());
  CHECK(adjudicate(g, run_of({{'T', ":"}})) == Player::Environment);
  CHECK(adjudicate(g, run_of({{'B', ":"}, {'B', ":"}})) == Player::Machine);
  CHECK(adjudicate(g, {}) == g.winner({}));
}

TEST_CASE("essential finiteness reads the repeating block") {
  CHECK(is_essentially_finite({"101", "0"}));
  CHECK_FALSE(is_essentially_finite({"", "1"}));
  CHECK_FALSE(is_essentially_finite({"0", "01"}));
}

TEST_CASE("random_legal_run is reproducible and legal") {
  Game g = reduce_b(qa_game(), tug_game());
  CHECK(random_legal_run(g, 0, 5).empty());
  CHECK(random_legal_run(g, 10, 42) == random_legal_run(g, 10, 42));
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    CHECK(is_legal_run(g, random_legal_run(g, 10, seed)));
}
