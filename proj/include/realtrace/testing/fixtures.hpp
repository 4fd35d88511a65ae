#pragma once

#include "realtrace/automaton.hpp"
#include "realtrace/dependence.hpp"
#include "realtrace/sigma11.hpp"

namespace realtrace::fixture {

/// {a, b, c} with a-b and b-c dependent; a and c commute.
AlphabetRef da3();

const Alphabet& binary();

/// Two-state Büchi automaton for (0*1)^omega: s0 -0-> s0, s0 -1-> s1,
/// s1 -0-> s0, s1 -1-> s1, accepting s1.
Automaton zero_star_one();

/// The same graph read as a deterministic finite-word automaton for (0*1)+.
Automaton zero_star_one_plus();

/// Büchi automaton for 1 . {0,1}^omega.
Automaton starts_with_one();

/// Depth-2 tree: root 0, level 1 = 1 0, level 2 = 1 1 1 1.
sigma11::FiniteTree sample_tree();

/// One-state tree labeled `label` everywhere.
sigma11::RegularTree constant_tree(Letter label);

/// Two-state tree labeling node x with |x| mod 2.
sigma11::RegularTree parity_tree();

}  // namespace realtrace::fixture
