#pragma once

#include <string>

#include "clt/formula.hpp"
#include "clt/onesided_types.hpp"

namespace clt {

// Grammar (ASCII "->" and "=>" for the arrow connectives):
//   formula := impl
//   impl    := atomf ("->" impl)?            right-associative
//   atomf   := ATOM | "(" formula ")"
//   ATOM    := [A-Za-z][A-Za-z0-9_]*
//   sequent := [formula ("," formula)*] "=>" formula
// Errors carry 1-based line:column locations.
Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

// Minimal-parenthesis printing; parse(print(x)) == x.
std::string print_formula(const Formula& f);
std::string print_sequent(const Sequent& s);

// Rendering for translated sequents: ~ binds tightest, then &, |, ->
// (right-associative).
std::string print_classical(const ClassicalFormula& f);

// One-sided surface syntax: literals "P" / "~P", composites always
// parenthesized: "(P & ~Q)". Sequents are comma-separated.
//   nnf := "~"? ATOM | "(" nnf ("&" | "|") nnf ")"
std::string print_nnf(const NNFFormula& f);
std::string print_one_sided(const OneSidedSequent& s);
NNFFormula parse_nnf(const std::string& text);
OneSidedSequent parse_one_sided(const std::string& text);

}  // namespace clt
