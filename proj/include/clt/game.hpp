#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clt {

// The two players: Machine (printed "T") and Environment (printed "B").
enum class Player { Machine, Environment };

Player other(Player p);
char player_tag(Player p);                   // 'T' / 'B'
std::optional<Player> player_from_tag(char c);

// A move is a nonempty string over printable non-whitespace characters.
using Move = std::string;

struct LabeledMove {
  Player player;
  Move move;

  friend bool operator==(const LabeledMove& a, const LabeledMove& b) {
    return a.player == b.player && a.move == b.move;
  }
};

// Finite sequence of labeled moves; a position is any run used as a
// prefix. Only finite runs are adjudicated.
using Run = std::vector<LabeledMove>;

// Bit strings name threads of branching recurrences; "" is the root
// thread.
using BitString = std::string;

// prefix . block block block ... ; the block is nonempty.
struct UltimatelyPeriodicBitString {
  BitString prefix;
  BitString block;
};

// An infinite bit string with finitely many 1s, i.e. an all-zero block.
bool is_essentially_finite(const UltimatelyPeriodicBitString& v);

// Finite description of an atomic game: a rooted tree whose edges carry
// (player, move) and whose every node carries the winner of a run that
// stops there.
struct GameTree {
  struct Edge;
  Player winner = Player::Machine;
  std::vector<Edge> edges;
};

struct GameTree::Edge {
  Player player;
  Move move;
  GameTree next;
};

// A constant game presented as structure (legality) plus content
// (winner). is_legal_move is the exact Lr relation. legal_moves is a
// finite menu of legal moves used to drive play: for games with finitely
// many legal moves it is all of them; games with unboundedly many (a
// parallel recurrence's untouched components, say) list the touched part
// plus one fresh representative.
class Game {
public:
  class Impl;

  std::vector<Move> legal_moves(const Run& position, Player p) const;
  bool is_legal_move(const Run& position, Player p, const Move& m) const;

  // Winner of a finite legal run (total, including the empty run).
  Player winner(const Run& run) const;

  explicit Game(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

private:
  std::shared_ptr<const Impl> impl_;
};

// Throws on duplicate (player, move) edges at a node.
Game atomic_game(const GameTree& tree);

// Role switch: labels flipped in every run.
Run neg_run(const Run& r);
Game neg(const Game& a);

// Moves "0.x" play in the antecedent (roles switched), "1.x" in the
// consequent; Machine wins iff it wins the consequent or loses the
// switched antecedent.
Game arrow(const Game& a, const Game& b);

// Keeps moves carrying the literal dot-prefix ("1." say) and strips it.
Run proj_component(const Run& r, const std::string& prefix);

// Parallel conjunction / disjunction over decimal-indexed components.
Game pand(const std::vector<Game>& components);
Game por(const std::vector<Game>& components);

// Choice connectives: the first move picks a component by decimal index
// (Environment picks for choice_conj, Machine for choice_disj); play
// continues inside the chosen component and a player who never picks
// loses.
Game choice_conj(const std::vector<Game>& components);
Game choice_disj(const std::vector<Game>& components);

// Parallel recurrence: an infinite parallel conjunction, components
// indexed by arbitrary decimal numbers.
Game prec(const Game& a);

// Thread names present in a position: "" plus w0, w1 for every
// replicative move "w:" made so far.
std::set<BitString> active_nodes(const Run& position);

// Active nodes organized as the binary split tree; leaves are the
// unsplit threads.
struct SplitTree {
  std::set<BitString> nodes;
  std::vector<BitString> leaves;  // sorted
};
SplitTree split_tree(const Run& position);

// Thread projection: keeps moves "u.x" whose node u is an initial
// segment of the (finite or infinite) thread name, strips "u.".
// Replicative moves never project.
Run proj_thread(const Run& r, const BitString& v);
Run proj_thread(const Run& r, const UltimatelyPeriodicBitString& v);

// Branching recurrences. Replicative moves "w:" are legal only for the
// Environment, at an active node, at most once per node; a
// non-replicative "w.x" needs x legal in the thread projection at every
// split-tree leaf at or below w. On finite runs the countable variant
// adjudicates identically: every projection factors through a leaf
// thread extended by zeros, which is essentially finite.
Game brec(const Game& a);
Game brec_countable(const Game& a);

// The reduction operators, literally composed from arrow and the
// recurrences.
Game reduce_p(const Game& a, const Game& b);   // prec(a) -> b
Game reduce_bc(const Game& a, const Game& b);  // brec_countable(a) -> b
Game reduce_b(const Game& a, const Game& b);   // brec(a) -> b

struct Offence {
  std::size_t index;
  Player offender;
};

// First move illegal in its preceding position, if any.
std::optional<Offence> first_offence(const Game& g, const Run& r);
bool is_legal_run(const Game& g, const Run& r);

// Offender's opponent if the run is illegal, otherwise the winner.
Player adjudicate(const Game& g, const Run& r);

// Reproducible pseudo-random legal run of length <= max_moves.
Run random_legal_run(const Game& g, std::size_t max_moves, std::uint64_t seed);

}  // namespace clt
