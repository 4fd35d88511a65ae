#pragma once

#include <optional>
#include <vector>

#include "realtrace/automaton.hpp"
#include "realtrace/lasso.hpp"
#include "realtrace/upword.hpp"

namespace realtrace {

/// True iff some run of `a` on `x` visits an accepting state infinitely
/// often. Searches for an accepting cycle in the product of `a` with the
/// stem/loop positions of x.
bool buchi_accepts(const Automaton& a, const UPWord& x);

/// An ultimately periodic word accepted by `a`, or nothing when L(a) is
/// empty.
std::optional<UPWord> buchi_nonempty(const Automaton& a);

/// States from which an accepting lasso is reachable.
std::vector<bool> live_states(const Automaton& a);

/// Some run on the finite word `w` ends in a live state.
bool is_live_prefix(const Automaton& a, const Word& w);

/// Büchi intersection (product with a two-phase flag). Both automata must
/// share the alphabet.
Automaton intersect(const Automaton& a, const Automaton& b);

/// True iff infinitely many prefixes of `x` are accepted by the
/// deterministic finite-word automaton `w` (the delta-limit W^delta).
/// Throws InputError when `w` is not deterministic.
bool delta_membership(const Automaton& w, const UPWord& x);

/// Lasso graph of the automaton itself: nodes are states, labels letters.
LassoGraph graph_of(const Automaton& a);

}  // namespace realtrace
