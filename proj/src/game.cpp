#include "clt/game.hpp"

#include <algorithm>
#include <random>

#include "clt/errors.hpp"

namespace clt {

Player other(Player p) { return p == Player::Machine ? Player::Environment : Player::Machine; }

char player_tag(Player p) { return p == Player::Machine ? 'T' : 'B'; }

std::optional<Player> player_from_tag(char c) {
  if (c == 'T') return Player::Machine;
  if (c == 'B') return Player::Environment;
  return std::nullopt;
}

bool is_essentially_finite(const UltimatelyPeriodicBitString& v) {
  return v.block.find('1') == std::string::npos;
}

class Game::Impl {
public:
  virtual ~Impl() = default;
  virtual std::vector<Move> menu(const Run& position, Player p) const = 0;
  virtual bool move_legal(const Run& position, Player p, const Move& m) const = 0;
  virtual Player winner(const Run& run) const = 0;
};

std::vector<Move> Game::legal_moves(const Run& position, Player p) const {
  auto moves = impl_->menu(position, p);
  std::sort(moves.begin(), moves.end());
  moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
  return moves;
}

bool Game::is_legal_move(const Run& position, Player p, const Move& m) const {
  return impl_->move_legal(position, p, m);
}

Player Game::winner(const Run& run) const { return impl_->winner(run); }

// ---- move-surface parsing ----

namespace {

// "<decimal>.<rest>" with a canonical index (no leading zeros) and a
// nonempty rest.
std::optional<std::pair<std::size_t, Move>> parse_indexed(const Move& m) {
  std::size_t i = 0;
  while (i < m.size() && m[i] >= '0' && m[i] <= '9') ++i;
  if (i == 0 || i >= m.size() || m[i] != '.') return std::nullopt;
  if (m[0] == '0' && i > 1) return std::nullopt;
  if (i + 1 >= m.size()) return std::nullopt;
  std::size_t index = 0;
  for (std::size_t j = 0; j < i; ++j) index = index * 10 + static_cast<std::size_t>(m[j] - '0');
  return std::make_pair(index, m.substr(i + 1));
}

std::string index_prefix(std::size_t i) { return std::to_string(i) + "."; }

struct BrecMove {
  bool replicative;
  BitString node;
  Move rest;  // empty for replicative moves
};

// "<bits>:" exactly, or "<bits>.<rest>" with nonempty rest.
std::optional<BrecMove> parse_brec_move(const Move& m) {
  std::size_t i = 0;
  while (i < m.size() && (m[i] == '0' || m[i] == '1')) ++i;
  if (i >= m.size()) return std::nullopt;
  if (m[i] == ':')
    return i + 1 == m.size() ? std::optional<BrecMove>{BrecMove{true, m.substr(0, i), ""}}
                             : std::nullopt;
  if (m[i] == '.' && i + 1 < m.size())
    return BrecMove{false, m.substr(0, i), m.substr(i + 1)};
  return std::nullopt;
}

bool is_prefix(const std::string& u, const std::string& v) {
  return u.size() <= v.size() && v.compare(0, u.size(), u) == 0;
}

}  // namespace

Run proj_component(const Run& r, const std::string& prefix) {
  Run out;
  for (const auto& lm : r)
    if (is_prefix(prefix, lm.move)) out.push_back({lm.player, lm.move.substr(prefix.size())});
  return out;
}

Run neg_run(const Run& r) {
  Run out;
  out.reserve(r.size());
  for (const auto& lm : r) out.push_back({other(lm.player), lm.move});
  return out;
}

std::set<BitString> active_nodes(const Run& position) {
  std::set<BitString> nodes;
  nodes.insert("");
  for (const auto& lm : position) {
    auto parsed = parse_brec_move(lm.move);
    if (parsed && parsed->replicative) {
      nodes.insert(parsed->node + "0");
      nodes.insert(parsed->node + "1");
    }
  }
  return nodes;
}

SplitTree split_tree(const Run& position) {
  SplitTree tree;
  tree.nodes = active_nodes(position);
  std::set<BitString> split;
  for (const auto& lm : position) {
    auto parsed = parse_brec_move(lm.move);
    if (parsed && parsed->replicative) split.insert(parsed->node);
  }
  for (const auto& node : tree.nodes)
    if (!split.count(node)) tree.leaves.push_back(node);
  return tree;
}

Run proj_thread(const Run& r, const BitString& v) {
  Run out;
  for (const auto& lm : r) {
    auto parsed = parse_brec_move(lm.move);
    if (parsed && !parsed->replicative && is_prefix(parsed->node, v))
      out.push_back({lm.player, parsed->rest});
  }
  return out;
}

Run proj_thread(const Run& r, const UltimatelyPeriodicBitString& v) {
  Run out;
  for (const auto& lm : r) {
    auto parsed = parse_brec_move(lm.move);
    if (!parsed || parsed->replicative) continue;
    const BitString& u = parsed->node;
    // u must be an initial segment of prefix . block block ...
    bool matches = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const char expected = i < v.prefix.size()
                                ? v.prefix[i]
                                : v.block[(i - v.prefix.size()) % v.block.size()];
      if (u[i] != expected) {
        matches = false;
        break;
      }
    }
    if (matches) out.push_back({lm.player, parsed->rest});
  }
  return out;
}

// ---- combinators ----

namespace {

class AtomicImpl final : public Game::Impl {
public:
  explicit AtomicImpl(GameTree tree) : tree_(std::move(tree)) { validate(tree_); }

  std::vector<Move> menu(const Run& position, Player p) const override {
    const GameTree* node = walk(position);
    std::vector<Move> out;
    if (!node) return out;
    for (const auto& e : node->edges)
      if (e.player == p) out.push_back(e.move);
    return out;
  }

  bool move_legal(const Run& position, Player p, const Move& m) const override {
    const GameTree* node = walk(position);
    if (!node) return false;
    for (const auto& e : node->edges)
      if (e.player == p && e.move == m) return true;
    return false;
  }

  Player winner(const Run& run) const override {
    const GameTree* node = walk(run);
    if (!node) throw InternalError("winner queried on an illegal atomic run");
    return node->winner;
  }

private:
  static void validate(const GameTree& node) {
    for (std::size_t i = 0; i < node.edges.size(); ++i)
      for (std::size_t j = i + 1; j < node.edges.size(); ++j)
        if (node.edges[i].player == node.edges[j].player &&
            node.edges[i].move == node.edges[j].move)
          throw Error("duplicate edge (" + std::string(1, player_tag(node.edges[i].player)) +
                      ", " + node.edges[i].move + ") in atomic game");
    for (const auto& e : node.edges) validate(e.next);
  }

  const GameTree* walk(const Run& r) const {
    const GameTree* node = &tree_;
    for (const auto& lm : r) {
      const GameTree* next = nullptr;
      for (const auto& e : node->edges)
        if (e.player == lm.player && e.move == lm.move) next = &e.next;
      if (!next) return nullptr;
      node = next;
    }
    return node;
  }

  GameTree tree_;
};

class NegImpl final : public Game::Impl {
public:
  explicit NegImpl(Game inner) : inner_(std::move(inner)) {}

  std::vector<Move> menu(const Run& position, Player p) const override {
    return inner_.legal_moves(neg_run(position), other(p));
  }
  bool move_legal(const Run& position, Player p, const Move& m) const override {
    return inner_.is_legal_move(neg_run(position), other(p), m);
  }
  Player winner(const Run& run) const override { return other(inner_.winner(neg_run(run))); }

private:
  Game inner_;
};

// Finite parallel composition over decimal-indexed components; the
// winner is the conjunction (pand) or disjunction (por) of the component
// winners.
class ParallelImpl final : public Game::Impl {
public:
  ParallelImpl(std::vector<Game> components, bool need_all)
      : components_(std::move(components)), need_all_(need_all) {
    if (components_.empty()) throw Error("parallel composition of no components");
  }

  std::vector<Move> menu(const Run& position, Player p) const override {
    std::vector<Move> out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const std::string prefix = index_prefix(i);
      for (const auto& m : components_[i].legal_moves(proj_component(position, prefix), p))
        out.push_back(prefix + m);
    }
    return out;
  }

  bool move_legal(const Run& position, Player p, const Move& m) const override {
    auto parsed = parse_indexed(m);
    if (!parsed || parsed->first >= components_.size()) return false;
    const std::string prefix = index_prefix(parsed->first);
    return components_[parsed->first].is_legal_move(proj_component(position, prefix), p,
                                                    parsed->second);
  }

  Player winner(const Run& run) const override {
    bool all = true, any = false;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const Player w = components_[i].winner(proj_component(run, index_prefix(i)));
      all = all && w == Player::Machine;
      any = any || w == Player::Machine;
    }
    return (need_all_ ? all : any) ? Player::Machine : Player::Environment;
  }

private:
  std::vector<Game> components_;
  bool need_all_;
};

// First move picks a component by bare decimal index; failing to pick
// loses for the picker.
class ChoiceImpl final : public Game::Impl {
public:
  ChoiceImpl(std::vector<Game> components, Player selector)
      : components_(std::move(components)), selector_(selector) {
    if (components_.empty()) throw Error("choice composition of no components");
  }

  std::vector<Move> menu(const Run& position, Player p) const override {
    std::vector<Move> out;
    if (position.empty()) {
      if (p == selector_)
        for (std::size_t i = 0; i < components_.size(); ++i) out.push_back(std::to_string(i));
      return out;
    }
    auto idx = selected(position);
    if (!idx) return out;
    Run rest(position.begin() + 1, position.end());
    return components_[*idx].legal_moves(rest, p);
  }

  bool move_legal(const Run& position, Player p, const Move& m) const override {
    if (position.empty()) return p == selector_ && parse_index(m).has_value();
    auto idx = selected(position);
    if (!idx) return false;
    Run rest(position.begin() + 1, position.end());
    return components_[*idx].is_legal_move(rest, p, m);
  }

  Player winner(const Run& run) const override {
    if (run.empty()) return other(selector_);
    auto idx = selected(run);
    if (!idx) throw InternalError("winner queried on an illegal choice run");
    Run rest(run.begin() + 1, run.end());
    return components_[*idx].winner(rest);
  }

private:
  std::optional<std::size_t> parse_index(const Move& m) const {
    if (m.empty() || (m[0] == '0' && m.size() > 1)) return std::nullopt;
    std::size_t value = 0;
    for (char c : m) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value >= components_.size()) return std::nullopt;
    return value;
  }

  std::optional<std::size_t> selected(const Run& position) const {
    if (position.empty() || position[0].player != selector_) return std::nullopt;
    return parse_index(position[0].move);
  }

  std::vector<Game> components_;
  Player selector_;
};

// Infinite parallel conjunction: components indexed by arbitrary decimal
// numbers. The menu lists touched components plus the smallest untouched
// index as the fresh representative.
class PrecImpl final : public Game::Impl {
public:
  explicit PrecImpl(Game inner) : inner_(std::move(inner)) {}

  std::vector<Move> menu(const Run& position, Player p) const override {
    std::set<std::size_t> touched;
    for (const auto& lm : position)
      if (auto parsed = parse_indexed(lm.move)) touched.insert(parsed->first);
    std::size_t fresh = 0;
    while (touched.count(fresh)) ++fresh;
    std::set<std::size_t> indices = touched;
    indices.insert(fresh);
    std::vector<Move> out;
    for (std::size_t i : indices) {
      const std::string prefix = index_prefix(i);
      for (const auto& m : inner_.legal_moves(proj_component(position, prefix), p))
        out.push_back(prefix + m);
    }
    return out;
  }

  bool move_legal(const Run& position, Player p, const Move& m) const override {
    auto parsed = parse_indexed(m);
    if (!parsed) return false;
    const std::string prefix = index_prefix(parsed->first);
    return inner_.is_legal_move(proj_component(position, prefix), p, parsed->second);
  }

  Player winner(const Run& run) const override {
    // Untouched components exist, so the empty-run winner must be the
    // machine before touched components are even consulted.
    if (inner_.winner({}) != Player::Machine) return Player::Environment;
    std::set<std::size_t> touched;
    for (const auto& lm : run)
      if (auto parsed = parse_indexed(lm.move)) touched.insert(parsed->first);
    for (std::size_t i : touched)
      if (inner_.winner(proj_component(run, index_prefix(i))) != Player::Machine)
        return Player::Environment;
    return Player::Machine;
  }

private:
  Game inner_;
};

class BrecImpl final : public Game::Impl {
public:
  BrecImpl(Game inner, bool countable) : inner_(std::move(inner)), countable_(countable) {}

  std::vector<Move> menu(const Run& position, Player p) const override {
    const SplitTree tree = split_tree(position);
    std::vector<Move> out;
    if (p == Player::Environment)
      for (const auto& leaf : tree.leaves) out.push_back(leaf + ":");
    for (const auto& node : tree.nodes) {
      // Moves legal at every leaf thread at or below the node.
      std::vector<Move> candidates;
      bool first = true;
      for (const auto& leaf : tree.leaves) {
        if (!is_prefix(node, leaf)) continue;
        auto moves = inner_.legal_moves(proj_thread(position, leaf), p);
        std::sort(moves.begin(), moves.end());
        if (first) {
          candidates = std::move(moves);
          first = false;
        } else {
          std::vector<Move> kept;
          std::set_intersection(candidates.begin(), candidates.end(), moves.begin(), moves.end(),
                                std::back_inserter(kept));
          candidates = std::move(kept);
        }
      }
      for (const auto& m : candidates) out.push_back(node + "." + m);
    }
    return out;
  }

  bool move_legal(const Run& position, Player p, const Move& m) const override {
    auto parsed = parse_brec_move(m);
    if (!parsed) return false;
    const SplitTree tree = split_tree(position);
    if (!tree.nodes.count(parsed->node)) return false;
    if (parsed->replicative) {
      if (p != Player::Environment) return false;
      for (const auto& lm : position)
        if (lm.move == m) return false;
      return true;
    }
    for (const auto& leaf : tree.leaves) {
      if (!is_prefix(parsed->node, leaf)) continue;
      if (!inner_.is_legal_move(proj_thread(position, leaf), p, parsed->rest)) return false;
    }
    return true;
  }

  Player winner(const Run& run) const override {
    // On finite runs every thread projection factors through a leaf
    // followed by zeros, so the countable and uncountable contents
    // coincide here.
    const SplitTree tree = split_tree(run);
    for (const auto& leaf : tree.leaves)
      if (inner_.winner(proj_thread(run, leaf)) != Player::Machine) return Player::Environment;
    return Player::Machine;
  }

private:
  Game inner_;
  bool countable_;
};

Game make_game(std::shared_ptr<const Game::Impl> impl) { return Game(std::move(impl)); }

}  // namespace

Game atomic_game(const GameTree& tree) { return make_game(std::make_shared<AtomicImpl>(tree)); }

Game neg(const Game& a) { return make_game(std::make_shared<NegImpl>(a)); }

Game pand(const std::vector<Game>& components) {
  return make_game(std::make_shared<ParallelImpl>(components, true));
}

Game por(const std::vector<Game>& components) {
  return make_game(std::make_shared<ParallelImpl>(components, false));
}

Game arrow(const Game& a, const Game& b) { return por({neg(a), b}); }

Game choice_conj(const std::vector<Game>& components) {
  return make_game(std::make_shared<ChoiceImpl>(components, Player::Environment));
}

Game choice_disj(const std::vector<Game>& components) {
  return make_game(std::make_shared<ChoiceImpl>(components, Player::Machine));
}

Game prec(const Game& a) { return make_game(std::make_shared<PrecImpl>(a)); }

Game brec(const Game& a) { return make_game(std::make_shared<BrecImpl>(a, false)); }

Game brec_countable(const Game& a) { return make_game(std::make_shared<BrecImpl>(a, true)); }

Game reduce_p(const Game& a, const Game& b) { return arrow(prec(a), b); }

Game reduce_bc(const Game& a, const Game& b) { return arrow(brec_countable(a), b); }

Game reduce_b(const Game& a, const Game& b) { return arrow(brec(a), b); }

std::optional<Offence> first_offence(const Game& g, const Run& r) {
  Run position;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!g.is_legal_move(position, r[i].player, r[i].move)) return Offence{i, r[i].player};
    position.push_back(r[i]);
  }
  return std::nullopt;
}

bool is_legal_run(const Game& g, const Run& r) { return !first_offence(g, r).has_value(); }

Player adjudicate(const Game& g, const Run& r) {
  if (auto off = first_offence(g, r)) return other(off->offender);
  return g.winner(r);
}

Run random_legal_run(const Game& g, std::size_t max_moves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Run run;
  for (std::size_t step = 0; step < max_moves; ++step) {
    if (rng() % 8 == 0) break;  // vary lengths
    std::vector<LabeledMove> options;
    for (Player p : {Player::Machine, Player::Environment})
      for (const auto& m : g.legal_moves(run, p)) options.push_back({p, m});
    if (options.empty()) break;
    run.push_back(options[rng() % options.size()]);
  }
  return run;
}

}  // namespace clt
