#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "realtrace/automaton.hpp"
#include "realtrace/dependence.hpp"
#include "realtrace/sigma11.hpp"
#include "realtrace/upword.hpp"

// Brute-force reference implementations. None of them calls the code it is
// meant to check: they work on plain words and explicit search.
namespace realtrace::oracle {

/// Every word reachable from w by swapping adjacent independent letters.
std::set<Word> swap_class(const DependenceAlphabet& da, const Word& w);

bool swap_closure_equivalent(const DependenceAlphabet& da, const Word& u, const Word& v);

/// Same letter counts and equal projections onto every dependent pair.
bool projection_equivalent(const DependenceAlphabet& da, const Word& u, const Word& v);

/// Least word of w's swap class.
Word least_in_class(const DependenceAlphabet& da, const Word& w);

/// Number of order ideals of the trace of w, by the recursion
/// ideals(P) = ideals(P minus m) + ideals(P minus the up-set of m) for a
/// minimal m.
std::size_t count_ideals(const DependenceAlphabet& da, const Word& w);

/// Distinct prefixes of size n, as least representatives, read off the
/// length-n prefixes of all words of w's class.
std::set<Word> prefixes_of_size(const DependenceAlphabet& da, const Word& w, std::size_t n);

/// Largest n <= cap where the prefix sets of size <= n coincide; cap when
/// they agree throughout.
std::size_t l_pref(const DependenceAlphabet& da, const Word& s, const Word& t, std::size_t cap);

/// Scans the prefixes of stem.loop^omega of lengths in
/// (|u| + q|v|, |u| + 2q|v|] for one accepted by the deterministic `w`,
/// where q is the state count.
bool delta_scan(const Automaton& w, const UPWord& x);

/// Compares u1.v1^omega and u2.v2^omega letter by letter over a window long
/// enough to decide equality.
bool same_infinite_word(const Word& u1, const Word& v1, const Word& u2, const Word& v2);

/// All accepted words of length <= max_len, by depth-first search over
/// state sets.
std::vector<Word> accepted_words(const Automaton& a, std::size_t max_len);

/// Labels along the branch stem.loop^omega, read node by node from the tree.
UPWord labels_along(const sigma11::RegularTree& t, const Word& stem, const Word& loop);

/// Searches every branch u.v^omega with |u| <= max_stem, 1 <= |v| <= max_loop
/// for one whose labels `accepts` admits.
template <typename Accepts>
bool some_branch(const sigma11::RegularTree& t, std::size_t max_stem, std::size_t max_loop, Accepts&& accepts);

/// True when w matches the L shape: x1 W1 A x2 W2 B ... with the primed and
/// unprimed block patterns, checked over the stem and two loop passes
/// (complete blocks only).
bool has_l_shape(const sigma11::TreeAlphabetSetup& setup, const UPWord& w);

/// Words over `letters` of length <= n, shortest first, lexicographic
/// within a length.
std::vector<Word> all_words(std::size_t letters, std::size_t max_len);

// ---------------------------------------------------------------------------

template <typename Accepts>
bool some_branch(const sigma11::RegularTree& t, std::size_t max_stem, std::size_t max_loop, Accepts&& accepts) {
  for (const Word& stem : all_words(2, max_stem))
    for (const Word& loop : all_words(2, max_loop)) {
      if (loop.empty()) continue;
      if (accepts(labels_along(t, stem, loop))) return true;
    }
  return false;
}

}  // namespace realtrace::oracle
