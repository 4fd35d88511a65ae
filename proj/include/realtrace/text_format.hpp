#pragma once

#include <string>
#include <string_view>

#include "realtrace/automaton.hpp"
#include "realtrace/dependence.hpp"
#include "realtrace/sigma11.hpp"

namespace realtrace {

// Line-oriented text formats. Every line is `key: values`; blank lines and
// text after '#' are ignored. Errors are ParseError with the 1-based line.

/// letters: a b c
/// depend: a b
/// allow_isolated: true
AlphabetRef parse_alphabet(std::string_view text);
std::string print_alphabet(const DependenceAlphabet& da);

/// mode: buchi | finite   (optional, default buchi)
/// alphabet: 0 1
/// states: s0 s1
/// initial: s0
/// accepting: s1
/// trans: s0 1 s1
Automaton parse_automaton(std::string_view text);
std::string print_automaton(const Automaton& a);

/// A finite tree with the alphabet its labels are drawn from.
struct LabeledTree {
  Alphabet labels;
  sigma11::FiniteTree tree;
};

/// alphabet: 0 1   (optional, default 0 1)
/// depth: 2
/// level0: 0
/// level1: 1 0
/// level2: 1 1 1 1
LabeledTree parse_finite_tree(std::string_view text);
std::string print_finite_tree(const Alphabet& labels, const sigma11::FiniteTree& tree);

/// alphabet: 0 1   (optional, default 0 1)
/// states: p q
/// initial: p
/// trans: p l q
/// output: p 1
sigma11::RegularTree parse_regular_tree(std::string_view text);
std::string print_regular_tree(const sigma11::RegularTree& t);

/// Whole file contents. Throws InputError when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace realtrace
