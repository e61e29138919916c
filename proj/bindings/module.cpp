#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clt/cl7.hpp"
#include "clt/errors.hpp"
#include "clt/formula.hpp"
#include "clt/intcalc.hpp"
#include "clt/jsonio.hpp"
#include "clt/onesided.hpp"
#include "clt/oracle.hpp"
#include "clt/text.hpp"

namespace py = pybind11;

namespace {

using namespace clt;

Substitution substitution_from(const std::map<std::string, std::string>& texts) {
  Substitution sub;
  for (const auto& [atom, value] : texts) sub.emplace(atom, parse_formula(value));
  return sub;
}

std::map<std::string, std::string> substitution_to(const Substitution& sub) {
  std::map<std::string, std::string> out;
  for (const auto& [atom, value] : sub) out.emplace(atom, print_formula(value));
  return out;
}

std::vector<std::string> violations_to(const std::vector<Violation>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.path + ": " + v.message);
  return out;
}

System system_from(const std::string& name) {
  if (name == "cl7") return System::CL7;
  if (name == "int") return System::Int;
  throw Error("unknown system \"" + name + "\" (expected cl7 or int)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Provers, translations and game evaluation for the implicative "
            "reduction calculi CL7 and Int, plus the underlying game operators.";

  py::register_exception<Error>(m, "CltError");

  // formulas and sequents (text in, text out)
  m.def("normalize_formula", [](const std::string& t) { return print_formula(parse_formula(t)); },
        "Parse and re-print a formula.");
  m.def("normalize_sequent", [](const std::string& t) { return print_sequent(parse_sequent(t)); });
  m.def("head", [](const std::string& t) { return head(parse_formula(t)); });
  m.def("occurrences",
        [](const std::string& t, const std::string& atom) {
          return occurrences(parse_sequent(t), atom);
        },
        py::arg("sequent"), py::arg("atom"));
  m.def("is_binary", [](const std::string& t) { return is_binary(parse_sequent(t)); });
  m.def("is_tautology", [](const std::string& t) { return is_tautology(parse_sequent(t)); });
  m.def("substitute",
        [](const std::string& t, const std::map<std::string, std::string>& sub) {
          return print_formula(substitute(parse_formula(t), substitution_from(sub)));
        });
  m.def("match_instance",
        [](const std::string& h, const std::string& b) -> py::object {
          auto sub = match_instance(parse_formula(h), parse_formula(b));
          if (!sub) return py::none();
          return py::cast(substitution_to(*sub));
        });
  m.def("relevant_formulas", [](const std::string& t) {
    std::vector<std::string> out;
    for (const auto& f : relevant_formulas(parse_sequent(t))) out.push_back(print_formula(f));
    return out;
  });

  // provers
  m.def("provable_cl7", [](const std::string& t) { return provable_cl7(parse_formula(t)); });
  m.def("int_provable", [](const std::string& t) { return int_provable(parse_sequent(t)); });
  m.def("prove",
        [](const std::string& sequent, const std::string& system,
           const std::string& engine) -> py::object {
          const Sequent s = parse_sequent(sequent);
          std::optional<ProofTree> proof;
          if (system == "int")
            proof = int_prove(s);
          else if (engine == "guided")
            proof = prove_binary_guided(s);
          else if (engine == "abstraction")
            proof = s.antecedent.empty() ? prove_via_abstraction(s.succedent) : std::nullopt;
          else
            proof = prove_exhaustive(s);
          if (!proof) return py::none();
          return py::cast(serialize_proof(*proof));
        },
        py::arg("sequent"), py::arg("system") = "cl7", py::arg("engine") = "exhaustive",
        "Returns the serialized proof, or None when unprovable.");
  m.def("check_proof", [](const std::string& doc, const std::string& system) {
    return violations_to(check_proof(deserialize_proof(doc), system_from(system)));
  });

  // binary-tautology oracle
  m.def("is_instance_of_binary_tautology",
        [](const std::string& t) { return is_instance_of_binary_tautology(parse_formula(t)); });
  m.def("binary_anti_instance", [](const std::string& t) -> py::object {
    auto witness = binary_anti_instance(parse_formula(t));
    if (!witness) return py::none();
    return py::make_tuple(print_formula(witness->template_formula),
                          substitution_to(witness->substitution));
  });
  m.def("enumerate_formulas", [](const std::vector<std::string>& atoms, int max_conn) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_formulas(atoms, max_conn)) out.push_back(print_formula(f));
    return out;
  });
  m.def("enumerate_binary_tautologies",
        [](const std::vector<std::string>& atoms, int max_conn) {
          std::vector<std::string> out;
          for (const auto& f : enumerate_binary_tautologies(atoms, max_conn))
            out.push_back(print_formula(f));
          return out;
        });

  // one-sided translation
  m.def("to_one_sided",
        [](const std::string& t) { return print_one_sided(to_one_sided(parse_sequent(t))); });
  m.def("nnf",
        [](const std::string& t, bool positive) {
          return print_nnf(
              nnf(parse_formula(t), positive ? Polarity::Positive : Polarity::Negative));
        },
        py::arg("formula"), py::arg("positive") = true);
  m.def("translate_proof", [](const std::string& doc) {
    return serialize_one_sided_proof(translate_proof(deserialize_proof(doc)));
  });
  m.def("check_one_sided", [](const std::string& doc) {
    return violations_to(check_one_sided(deserialize_one_sided_proof(doc)));
  });

  // games
  m.def("judge", [](const std::string& game_doc, const std::string& run_doc) {
    const Game g = deserialize_game(game_doc);
    const Run r = deserialize_run(run_doc);
    py::dict out;
    out["winner"] = std::string(1, player_tag(adjudicate(g, r)));
    auto off = first_offence(g, r);
    out["legal"] = !off.has_value();
    if (off) {
      out["offender"] = std::string(1, player_tag(off->offender));
      out["index"] = off->index;
    }
    return out;
  });
  m.def("random_legal_run",
        [](const std::string& game_doc, std::size_t max_moves, std::uint64_t seed) {
          return serialize_run(random_legal_run(deserialize_game(game_doc), max_moves, seed));
        },
        py::arg("game"), py::arg("max_moves"), py::arg("seed"));
}
