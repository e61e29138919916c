#include "clt/jsonio.hpp"

#include <json.hpp>

#include "clt/errors.hpp"
#include "clt/text.hpp"

namespace clt {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("not valid JSON", "");
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError("expected an object", path);
}

void reject_unknown(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) throw SchemaError("unknown key \"" + key + "\"", path);
  }
}

const json& field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing key \"") + key + "\"", path);
  return *it;
}

std::string string_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_string()) throw SchemaError(std::string("\"") + key + "\" must be a string",
                                        path + "/" + key);
  return v.get<std::string>();
}

void check_format(const json& j, const std::string& path) {
  if (string_field(j, "format", path) != kFormatTag)
    throw SchemaError(std::string("expected format \"") + kFormatTag + "\"", path + "/format");
}

Player player_field(const json& j, const char* key, const std::string& path) {
  const std::string tag = string_field(j, key, path);
  if (tag.size() == 1)
    if (auto p = player_from_tag(tag[0])) return *p;
  throw SchemaError("player must be \"T\" or \"B\"", path + "/" + key);
}

// ---- two-sided proofs ----

const char* rule_tag(Rule r) {
  switch (r) {
    case Rule::Axiom: return "axiom";
    case Rule::RightImp: return "right_imp";
    case Rule::LeftImp: return "left_imp";
    case Rule::Contraction: return "contraction";
  }
  return "?";
}

json proof_to_json(const ProofTree& t) {
  json node;
  node["rule"] = rule_tag(t.rule);
  node["sequent"] = print_sequent(t.conclusion);
  json premises = json::array();
  for (const auto& p : t.premises) premises.push_back(proof_to_json(p));
  node["premises"] = std::move(premises);
  return node;
}

ProofTree proof_from_json(const json& j, const std::string& path, bool top) {
  require_object(j, path);
  if (top) {
    check_format(j, path);
    reject_unknown(j, path, {"format", "rule", "sequent", "premises"});
  } else {
    reject_unknown(j, path, {"rule", "sequent", "premises"});
  }
  ProofTree out{Sequent{{}, Formula::atom("P")}, Rule::Axiom, {}};
  const std::string rule = string_field(j, "rule", path);
  if (rule == "axiom")
    out.rule = Rule::Axiom;
  else if (rule == "right_imp")
    out.rule = Rule::RightImp;
  else if (rule == "left_imp")
    out.rule = Rule::LeftImp;
  else if (rule == "contraction")
    out.rule = Rule::Contraction;
  else
    throw SchemaError("unknown rule \"" + rule + "\"", path + "/rule");
  try {
    out.conclusion = parse_sequent(string_field(j, "sequent", path));
  } catch (const ParseError& e) {
    throw SchemaError(std::string("bad sequent: ") + e.what(), path + "/sequent");
  }
  const json& premises = field(j, "premises", path);
  if (!premises.is_array()) throw SchemaError("\"premises\" must be an array", path + "/premises");
  for (std::size_t i = 0; i < premises.size(); ++i)
    out.premises.push_back(
        proof_from_json(premises[i], path + "/premises/" + std::to_string(i), false));
  return out;
}

// ---- one-sided proofs ----

const char* one_sided_rule_tag(OneSidedRule r) {
  switch (r) {
    case OneSidedRule::Axiom: return "axiom";
    case OneSidedRule::RightImp: return "right_imp_1s";
    case OneSidedRule::LeftImp: return "left_imp_1s";
  }
  return "?";
}

json one_sided_to_json(const OneSidedProof& p) {
  json node;
  node["rule"] = one_sided_rule_tag(p.rule);
  node["sequent"] = print_one_sided(p.conclusion);
  json premises = json::array();
  for (const auto& q : p.premises) premises.push_back(one_sided_to_json(q));
  node["premises"] = std::move(premises);
  return node;
}

OneSidedProof one_sided_from_json(const json& j, const std::string& path, bool top) {
  require_object(j, path);
  if (top) {
    check_format(j, path);
    reject_unknown(j, path, {"format", "rule", "sequent", "premises"});
  } else {
    reject_unknown(j, path, {"rule", "sequent", "premises"});
  }
  OneSidedProof out;
  const std::string rule = string_field(j, "rule", path);
  if (rule == "axiom")
    out.rule = OneSidedRule::Axiom;
  else if (rule == "right_imp_1s")
    out.rule = OneSidedRule::RightImp;
  else if (rule == "left_imp_1s")
    out.rule = OneSidedRule::LeftImp;
  else
    throw SchemaError("unknown rule \"" + rule + "\"", path + "/rule");
  try {
    out.conclusion = parse_one_sided(string_field(j, "sequent", path));
  } catch (const ParseError& e) {
    throw SchemaError(std::string("bad one-sided sequent: ") + e.what(), path + "/sequent");
  }
  const json& premises = field(j, "premises", path);
  if (!premises.is_array()) throw SchemaError("\"premises\" must be an array", path + "/premises");
  for (std::size_t i = 0; i < premises.size(); ++i)
    out.premises.push_back(
        one_sided_from_json(premises[i], path + "/premises/" + std::to_string(i), false));
  return out;
}

// ---- runs ----

json run_to_json(const Run& r) {
  json moves = json::array();
  for (const auto& lm : r) {
    json m;
    m["player"] = std::string(1, player_tag(lm.player));
    m["move"] = lm.move;
    moves.push_back(std::move(m));
  }
  return moves;
}

Run run_from_json(const json& moves, const std::string& path) {
  if (!moves.is_array()) throw SchemaError("\"moves\" must be an array", path);
  Run out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const std::string mpath = path + "/" + std::to_string(i);
    const json& m = moves[i];
    require_object(m, mpath);
    reject_unknown(m, mpath, {"player", "move"});
    const std::string move = string_field(m, "move", mpath);
    if (move.empty()) throw SchemaError("moves must be nonempty", mpath + "/move");
    out.push_back({player_field(m, "player", mpath), move});
  }
  return out;
}

// ---- game descriptions ----

GameTree game_tree_from_json(const json& j, const std::string& path, bool embedded_in_op) {
  require_object(j, path);
  if (embedded_in_op)
    reject_unknown(j, path, {"op", "winner", "edges"});
  else
    reject_unknown(j, path, {"winner", "edges"});
  GameTree out;
  out.winner = player_field(j, "winner", path);
  if (auto it = j.find("edges"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("\"edges\" must be an array", path + "/edges");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string epath = path + "/edges/" + std::to_string(i);
      const json& e = (*it)[i];
      require_object(e, epath);
      reject_unknown(e, epath, {"player", "move", "next"});
      GameTree::Edge edge{player_field(e, "player", epath), string_field(e, "move", epath),
                          game_tree_from_json(field(e, "next", epath), epath + "/next", false)};
      if (edge.move.empty()) throw SchemaError("moves must be nonempty", epath + "/move");
      out.edges.push_back(std::move(edge));
    }
  }
  return out;
}

Game game_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  const std::string op = string_field(j, "op", path);
  auto unary = [&](auto make) {
    reject_unknown(j, path, {"op", "arg"});
    return make(game_from_json(field(j, "arg", path), path + "/arg"));
  };
  auto binary = [&](auto make) {
    reject_unknown(j, path, {"op", "left", "right"});
    return make(game_from_json(field(j, "left", path), path + "/left"),
                game_from_json(field(j, "right", path), path + "/right"));
  };
  auto nary = [&](auto make) {
    reject_unknown(j, path, {"op", "args"});
    const json& args = field(j, "args", path);
    if (!args.is_array() || args.empty())
      throw SchemaError("\"args\" must be a nonempty array", path + "/args");
    std::vector<Game> components;
    for (std::size_t i = 0; i < args.size(); ++i)
      components.push_back(game_from_json(args[i], path + "/args/" + std::to_string(i)));
    return make(components);
  };

  if (op == "atomic") {
    try {
      return atomic_game(game_tree_from_json(j, path, true));
    } catch (const Error& e) {
      if (dynamic_cast<const SchemaError*>(&e)) throw;
      throw SchemaError(e.what(), path);
    }
  }
  if (op == "neg") return unary([](Game a) { return neg(a); });
  if (op == "prec") return unary([](Game a) { return prec(a); });
  if (op == "brec") return unary([](Game a) { return brec(a); });
  if (op == "brec_c") return unary([](Game a) { return brec_countable(a); });
  if (op == "arrow") return binary([](Game a, Game b) { return arrow(a, b); });
  if (op == "reduce_p") return binary([](Game a, Game b) { return reduce_p(a, b); });
  if (op == "reduce_bc") return binary([](Game a, Game b) { return reduce_bc(a, b); });
  if (op == "reduce_b") return binary([](Game a, Game b) { return reduce_b(a, b); });
  if (op == "pand") return nary([](const std::vector<Game>& gs) { return pand(gs); });
  if (op == "por") return nary([](const std::vector<Game>& gs) { return por(gs); });
  if (op == "cconj") return nary([](const std::vector<Game>& gs) { return choice_conj(gs); });
  if (op == "cdisj") return nary([](const std::vector<Game>& gs) { return choice_disj(gs); });
  throw SchemaError("unknown op \"" + op + "\"", path + "/op");
}

}  // namespace

std::string serialize_proof(const ProofTree& t) {
  json doc = proof_to_json(t);
  doc["format"] = kFormatTag;
  return dump(doc);
}

ProofTree deserialize_proof(const std::string& text) {
  return proof_from_json(parse_json(text), "", true);
}

std::string serialize_one_sided_proof(const OneSidedProof& p) {
  json doc = one_sided_to_json(p);
  doc["format"] = kFormatTag;
  return dump(doc);
}

OneSidedProof deserialize_one_sided_proof(const std::string& text) {
  return one_sided_from_json(parse_json(text), "", true);
}

std::string serialize_run(const Run& r) {
  json doc;
  doc["format"] = kFormatTag;
  doc["moves"] = run_to_json(r);
  return dump(doc);
}

Run deserialize_run(const std::string& text) {
  json doc = parse_json(text);
  require_object(doc, "");
  check_format(doc, "");
  reject_unknown(doc, "", {"format", "moves"});
  return run_from_json(field(doc, "moves", ""), "/moves");
}

Game deserialize_game(const std::string& text) {
  json doc = parse_json(text);
  require_object(doc, "");
  check_format(doc, "");
  // The combinator expression sits at the top level next to "format".
  json expr = doc;
  expr.erase("format");
  return game_from_json(expr, "");
}

std::string normalize_game_description(const std::string& text) {
  json doc = parse_json(text);
  deserialize_game(text);  // validation
  return dump(doc);
}

}  // namespace clt
