#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "realtrace/automaton.hpp"
#include "realtrace/dependence.hpp"
#include "realtrace/trace.hpp"
#include "realtrace/upword.hpp"

namespace realtrace::sigma11 {

/// The dependence alphabet Gamma = Sigma + Sigma' + {A, B} used to code
/// binary trees as traces. Letters of Sigma commute only with A and with
/// Sigma'; letters of Sigma' commute only with B and with Sigma.
///
/// Gamma's letter order is Sigma, then Sigma' (same order), then A, B.
struct TreeAlphabetSetup {
  Alphabet sigma;
  AlphabetRef gamma;

  Letter base(Letter a) const { return a; }
  Letter primed(Letter a) const { return a + static_cast<Letter>(sigma.size()); }
  Letter sep_a() const { return static_cast<Letter>(2 * sigma.size()); }
  Letter sep_b() const { return static_cast<Letter>(2 * sigma.size() + 1); }
  bool is_base(Letter g) const { return g < sigma.size(); }
  bool is_primed(Letter g) const { return g >= sigma.size() && g < 2 * sigma.size(); }
  bool is_separator(Letter g) const { return g == sep_a() || g == sep_b(); }
  /// Sigma letter behind a base or primed Gamma letter.
  Letter unprime(Letter g) const { return is_primed(g) ? g - static_cast<Letter>(sigma.size()) : g; }
  /// Separator emitted after the block of `level`: A after even levels.
  Letter separator_after(std::size_t level) const { return level % 2 == 0 ? sep_a() : sep_b(); }
};

/// Throws InputError when |sigma| < 2 or the primed copies and A, B clash
/// with sigma's names.
TreeAlphabetSetup build_setup(const std::vector<std::string>& sigma);

inline constexpr std::size_t kMaxTreeDepth = 6;

/// Labels of all nodes of {l,r}^<=depth. Level n holds 2^n labels in
/// lexicographic node order (l before r).
class FiniteTree {
 public:
  /// Throws InputError on wrong level sizes or depth above kMaxTreeDepth.
  explicit FiniteTree(std::vector<Word> levels);

  std::size_t depth() const { return levels_.size() - 1; }
  const Word& level(std::size_t n) const { return levels_.at(n); }
  Letter label(std::size_t level, std::size_t lex_index) const { return levels_.at(level).at(lex_index); }
  /// Label of the node addressed by `path` (0 = l, 1 = r).
  Letter label(const Word& path) const;
  FiniteTree truncated(std::size_t depth) const;

  bool operator==(const FiniteTree&) const = default;

 private:
  std::vector<Word> levels_;
};

/// Directions as letters: l = 0, r = 1.
const Alphabet& direction_alphabet();

/// An infinite tree labeled by a deterministic total machine reading node
/// addresses: the label of node x is the output of the state reached on x.
class RegularTree {
 public:
  RegularTree(Alphabet labels, std::vector<std::string> state_names, State initial,
              std::vector<std::array<State, 2>> next, std::vector<Letter> output);

  const Alphabet& labels() const { return labels_; }
  std::size_t num_states() const { return next_.size(); }
  State initial() const { return initial_; }
  State next(State s, Letter direction) const { return next_.at(s).at(direction); }
  Letter output(State s) const { return output_.at(s); }
  const std::string& state_name(State s) const { return names_.at(s); }

  Letter label(const Word& path) const;
  FiniteTree truncate(std::size_t depth) const;

 private:
  Alphabet labels_;
  std::vector<std::string> names_;
  State initial_;
  std::vector<std::array<State, 2>> next_;
  std::vector<Letter> output_;
};

/// Level-alternating code V0' A U1 B V2' A ... of all levels 0..depth,
/// ending with the separator after the last level. Even levels are listed
/// in reverse lexicographic order and primed, odd levels in lexicographic
/// order.
Word g_code(const TreeAlphabetSetup& setup, const FiniteTree& t);

/// g_code without its trailing separator: the code through a complete
/// level boundary.
Word g_code_through_level(const TreeAlphabetSetup& setup, const FiniteTree& t, std::size_t level);

FiniteTrace h_trunc(const TreeAlphabetSetup& setup, const FiniteTree& t);

/// Büchi automaton over Gamma for words x1 W1 A x2 W2 B x3 W3 A ... with
/// x(odd) in Sigma', x(even) in Sigma, W(odd) in (Sigma' Sigma Sigma)*
/// (Sigma + eps), W(even) in (Sigma Sigma' Sigma')* (Sigma' + eps), and
/// unprimed x-sequence accepted by `r`.
Automaton build_L_automaton(const TreeAlphabetSetup& setup, const Automaton& r);

/// Unprimed x-letters of a word accepted by the L automaton, as an
/// ultimately periodic word over Sigma. Nothing when the word has only
/// finitely many separators.
std::optional<UPWord> project_shape_word(const TreeAlphabetSetup& setup, const UPWord& w);

/// Label sequence along an ultimately periodic branch.
UPWord branch_labels(const RegularTree& t, const UPWord& branch);

/// A branch (over direction_alphabet()) whose labels are accepted by `r`,
/// found by Büchi emptiness on tree-machine x r. Every returned branch has
/// been replayed through buchi_accepts.
std::optional<UPWord> path_exists(const RegularTree& t, const Automaton& r);

/// The branch-driven factorization of the code through level k.
///
/// Level i's block in its enumeration order is v[i] x[i] u[i]. The block
/// position of x[i] is |v[i]| = 2|u[i-1]| + c, where c picks the left or
/// right child of the previous branch node. `word` is x0 u0 A v1 x1 u1 B
/// v2 x2 u2 ... vk xk uk.
struct SigmaWitness {
  Word word;
  std::vector<Letter> x;
  std::vector<Word> u;
  std::vector<Word> v;
};

/// Throws PreconditionError when the branch has fewer than k directions
/// or the tree is shallower than k.
SigmaWitness witness_sigma(const TreeAlphabetSetup& setup, const FiniteTree& t, const Word& branch, std::size_t k);

/// The commuted form x0 W1 A x1 W2 B ... x(k): each W interleaves the u
/// of one level with the v of the next (u v v u v v ... [v]). The u of
/// level k is not included.
Word shape_prefix(const TreeAlphabetSetup& setup, const SigmaWitness& w);

struct LemmaCheck {
  bool witness_matches_code = false;  // at every complete level boundary
  bool shape_matches_witness = false;
  bool labels_live = false;
  bool shape_live = false;

  bool ok() const { return witness_matches_code && shape_matches_witness && labels_live && shape_live; }
};

/// Finite-depth check that the branch's labels and the tree code agree
/// with the L language: trace equalities at every level boundary through
/// k, plus liveness of the label prefix in r and of the shape prefix in the
/// L automaton `l`.
LemmaCheck check_lemma_finite(const TreeAlphabetSetup& setup, const Automaton& r, const Automaton& l,
                              const FiniteTree& t, const Word& branch, std::size_t k);
LemmaCheck check_lemma_finite(const TreeAlphabetSetup& setup, const Automaton& r, const FiniteTree& t,
                              const Word& branch, std::size_t k);

/// (k-1) + 1 + 2 + ... + 2^(k-2).
std::size_t modulus_bound(std::size_t k);

/// For trees agreeing below level k: l_pref(h(t), h(s)) saturates
/// modulus_bound(k). Both trees are cut to depth k+1 first. Throws
/// PreconditionError unless k >= 2, both depths are >= k+1 and the trees
/// agree on levels < k.
bool tree_code_modulus(const TreeAlphabetSetup& setup, const FiniteTree& t, const FiniteTree& s, std::size_t k);

}  // namespace realtrace::sigma11
