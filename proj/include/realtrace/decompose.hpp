#pragma once

#include <vector>

#include "realtrace/automaton.hpp"

namespace realtrace {

/// One piece U . V^omega of a monoalphabetic decomposition.
///
/// `prefix` (U) accepts words leading from an initial state to `cut_state`
/// whose letter set is exactly `prefix_letters`; `period` (V) accepts
/// nonempty words looping on `cut_state` whose letter set is exactly
/// `period_letters`. Both are finite-word automata.
struct DecompositionComponent {
  State cut_state;
  LetterSet prefix_letters;
  LetterSet period_letters;
  Automaton prefix;
  Automaton period;
};

/// Splits L(a) into finitely many monoalphabetic components: an infinite
/// word is accepted by `a` iff it factors as u v1 v2 ... with u in some
/// component's U and every vi in the same component's V. Components are
/// indexed by (accepting state, letter set of U, letter set of V); empty
/// ones are dropped.
std::vector<DecompositionComponent> decompose_monoalphabetic(const Automaton& a);

/// Büchi automaton for L(u) . L(v)^omega. Throws InputError when v
/// accepts the empty word or the alphabets differ.
Automaton build_omega_from_pair(const Automaton& u, const Automaton& v);

}  // namespace realtrace
