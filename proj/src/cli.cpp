#include "clt/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "clt/cl7.hpp"
#include "clt/errors.hpp"
#include "clt/formula.hpp"
#include "clt/intcalc.hpp"
#include "clt/jsonio.hpp"
#include "clt/onesided.hpp"
#include "clt/oracle.hpp"
#include "clt/text.hpp"

namespace clt {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Atom> atom_alphabet(int count) {
  static const std::vector<Atom> names = {"P", "Q", "R", "S", "T", "U", "V", "W"};
  if (count < 1 || count > static_cast<int>(names.size()))
    throw Error("--atoms must be between 1 and " + std::to_string(names.size()));
  return {names.begin(), names.begin() + count};
}

int run_prove(const std::string& system, const std::string& engine, const std::string& sequent_text,
              std::ostream& out) {
  const Sequent s = parse_sequent(sequent_text);
  std::optional<ProofTree> proof;
  if (system == "int") {
    if (engine != "exhaustive")
      throw Error("system int supports only the exhaustive engine");
    proof = int_prove(s);
  } else if (engine == "exhaustive") {
    proof = prove_exhaustive(s);
  } else if (engine == "guided") {
    proof = prove_binary_guided(s);
  } else {  // abstraction
    if (!s.antecedent.empty())
      throw Error("the abstraction engine proves formulas; use an empty antecedent");
    proof = prove_via_abstraction(s.succedent);
  }
  if (!proof) return kNegative;
  out << serialize_proof(*proof);
  return kOk;
}

int run_check_proof(const std::string& system, const std::string& path, std::ostream& out) {
  const ProofTree proof = deserialize_proof(read_file(path));
  const auto violations = check_proof(proof, system == "int" ? System::Int : System::CL7);
  if (violations.empty()) {
    out << "ok\n";
    return kOk;
  }
  for (const auto& v : violations) out << v.path << ": " << v.message << "\n";
  return kNegative;
}

int run_instance_check(const std::string& formula_text, std::ostream& out) {
  const Formula h = parse_formula(formula_text);
  const auto witness = binary_anti_instance(h);
  if (!witness) {
    out << "no\n";
    return kNegative;
  }
  out << "yes\n";
  out << "template: " << print_formula(witness->template_formula) << "\n";
  for (const auto& [atom, value] : witness->substitution)
    out << atom << " := " << print_formula(value) << "\n";
  return kOk;
}

int run_translate(const std::string& sequent_text, const std::string& proof_path,
                  std::ostream& out) {
  const Sequent s = parse_sequent(sequent_text);
  if (proof_path.empty()) {
    out << print_one_sided(to_one_sided(s)) << "\n";
    return kOk;
  }
  const ProofTree proof = deserialize_proof(read_file(proof_path));
  if (!(proof.conclusion == s))
    throw Error("the proof concludes " + print_sequent(proof.conclusion) + ", not " +
                print_sequent(s));
  const auto violations = check_proof(proof, System::CL7);
  if (!violations.empty())
    throw Error("not a CL7 proof: " + violations.front().path + ": " +
                violations.front().message);
  out << serialize_one_sided_proof(translate_proof(proof));
  return kOk;
}

int run_enumerate(int atoms, int max_conn, bool binary_tautologies, std::ostream& out) {
  const auto alphabet = atom_alphabet(atoms);
  const auto formulas = binary_tautologies ? enumerate_binary_tautologies(alphabet, max_conn)
                                           : enumerate_formulas(alphabet, max_conn);
  for (const auto& f : formulas) out << print_formula(f) << "\n";
  return kOk;
}

int run_judge(const std::string& game_path, const std::string& run_path, std::ostream& out) {
  const Game game = deserialize_game(read_file(game_path));
  const Run run = deserialize_run(read_file(run_path));
  const Player winner = adjudicate(game, run);
  out << player_tag(winner) << "\n";
  if (auto off = first_offence(game, run))
    out << "illegal move at index " << off->index << " by " << player_tag(off->offender) << "\n";
  return winner == Player::Machine ? kOk : kNegative;
}

int run_selftest(int max_conn, std::ostream& out) {
  const auto formulas = enumerate_formulas({"P", "Q"}, max_conn);
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  for (const auto& h : formulas) {
    const bool by_search = provable_cl7(h);
    const bool by_oracle = is_instance_of_binary_tautology(h);
    const auto by_abstraction = prove_via_abstraction(h);
    ++checked;
    if (by_search != by_oracle || by_search != by_abstraction.has_value()) {
      ++disagreements;
      out << "disagree: " << print_formula(h) << " search=" << by_search
          << " oracle=" << by_oracle << " abstraction=" << by_abstraction.has_value() << "\n";
    }
  }
  out << "checked " << checked << " formulas over {P,Q} with <= " << max_conn
      << " connectives, " << disagreements << " disagreements\n";
  return disagreements == 0 ? kOk : kNegative;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cl-toolkit: provers, translations and game evaluation for "
               "the implicative reduction calculi"};
  app.require_subcommand(1);

  std::string system = "cl7";
  std::string engine = "exhaustive";
  std::string sequent_text;
  auto* prove = app.add_subcommand("prove", "decide a sequent and print a proof");
  prove->add_option("--system", system)->check(CLI::IsMember({"cl7", "int"}));
  prove->add_option("--engine", engine)
      ->check(CLI::IsMember({"exhaustive", "guided", "abstraction"}));
  prove->add_option("sequent", sequent_text)->required();

  std::string check_system = "cl7";
  std::string check_path;
  auto* check = app.add_subcommand("check-proof", "validate a serialized proof");
  check->add_option("--system", check_system)->check(CLI::IsMember({"cl7", "int"}));
  check->add_option("file", check_path)->required();

  std::string instance_text;
  auto* instance = app.add_subcommand("instance-check",
                                      "is the formula an instance of a binary tautology?");
  instance->add_option("formula", instance_text)->required();

  std::string translate_text;
  std::string translate_proof_path;
  auto* translate = app.add_subcommand("translate", "one-sided translation of a sequent or proof");
  translate->add_option("sequent", translate_text)->required();
  translate->add_option("--proof", translate_proof_path);

  int enum_atoms = 1;
  int enum_conn = 0;
  bool enum_bt = false;
  auto* enumerate = app.add_subcommand("enumerate", "list formulas in the canonical order");
  enumerate->add_option("--atoms", enum_atoms)->required();
  enumerate->add_option("--max-conn", enum_conn)->required();
  enumerate->add_flag("--binary-tautologies", enum_bt);

  std::string game_path;
  std::string run_path;
  auto* judge = app.add_subcommand("judge", "adjudicate a run of a game");
  judge->add_option("--game", game_path)->required();
  judge->add_option("--run", run_path)->required();

  int selftest_conn = 4;
  auto* selftest = app.add_subcommand("selftest", "three-way provability agreement sweep");
  selftest->add_option("--max-conn", selftest_conn);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (prove->parsed()) return run_prove(system, engine, sequent_text, out);
    if (check->parsed()) return run_check_proof(check_system, check_path, out);
    if (instance->parsed()) return run_instance_check(instance_text, out);
    if (translate->parsed()) return run_translate(translate_text, translate_proof_path, out);
    if (enumerate->parsed()) return run_enumerate(enum_atoms, enum_conn, enum_bt, out);
    if (judge->parsed()) return run_judge(game_path, run_path, out);
    if (selftest->parsed()) return run_selftest(selftest_conn, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace clt
