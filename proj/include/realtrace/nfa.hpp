#pragma once

#include <cstddef>
#include <vector>

#include "realtrace/automaton.hpp"

namespace realtrace {

// Finite-word reading of an Automaton: a word is accepted when some run
// ends in an accepting state.

bool nfa_accepts(const Automaton& a, const Word& w);
bool accepts_empty_word(const Automaton& a);

/// Removes states not on any path from an initial to an accepting state.
Automaton trim(const Automaton& a);
bool nfa_is_empty(const Automaton& a);
/// True when the trimmed automaton has no cycle.
bool is_finite_language(const Automaton& a);

/// Subset construction. The result is deterministic and complete over the
/// alphabet reachable part; the empty subset is omitted, so the result may
/// be partial.
Automaton determinize(const Automaton& a);

/// Trie automaton accepting exactly `words`.
Automaton from_words(const Alphabet& alphabet, const std::vector<Word>& words, Acceptance mode = Acceptance::finite);

/// All accepted words of exactly `length` letters, in lexicographic order.
std::vector<Word> accepted_words_of_length(const Automaton& a, std::size_t length);

}  // namespace realtrace
