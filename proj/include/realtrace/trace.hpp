#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "realtrace/alphabet.hpp"
#include "realtrace/dependence.hpp"

namespace realtrace {

/// A finite trace: a labeled acyclic dependence graph over a dependence
/// alphabet, kept in canonical form.
///
/// Vertex `i` is the i-th letter of the lexicographic normal form, so two
/// traces are equal exactly when their normal forms are. Edges hold the
/// covering (Hasse) relation of the dependence order; the full order is its
/// transitive closure. Values are immutable.
class FiniteTrace {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    bool operator==(const Edge&) const = default;
  };

  static FiniteTrace empty_trace(AlphabetRef da);

  const AlphabetRef& alphabet() const { return alphabet_; }
  const Word& normal_form() const { return normal_form_; }
  std::size_t size() const { return normal_form_.size(); }
  bool empty() const { return normal_form_.empty(); }
  Letter label(std::size_t v) const { return normal_form_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::string to_string() const { return alphabet_->letters().format(normal_form_); }

  friend bool operator==(const FiniteTrace& s, const FiniteTrace& t);
  /// Length-lexicographic order on normal forms. Only meaningful between
  /// traces over the same alphabet.
  friend std::strong_ordering operator<=>(const FiniteTrace& s, const FiniteTrace& t);

 private:
  friend FiniteTrace make_trace_from_normal_form(AlphabetRef da, Word nf);

  FiniteTrace(AlphabetRef da, Word nf);

  AlphabetRef alphabet_;
  Word normal_form_;
  std::vector<Edge> edges_;
};

/// The morphism from words to traces: one vertex per position, with an
/// edge i -> j whenever i < j and the letters at i and j are dependent.
FiniteTrace phi_word(const AlphabetRef& da, const Word& w);
FiniteTrace phi_word(const AlphabetRef& da, std::string_view w);

/// Graph concatenation: disjoint union plus an edge from every vertex of
/// `s` to every dependent-lettered vertex of `t`.
FiniteTrace concat(const FiniteTrace& s, const FiniteTrace& t);

/// u ~_I v, decided by comparing the images under phi_word.
bool equivalent(const AlphabetRef& da, const Word& u, const Word& v);

/// Least word under letter order whose image is `t`.
Word lex_normal_form(const FiniteTrace& t);

/// Maximal-step factorization: step k holds the minimal vertices left after
/// removing steps < k, sorted by letter order.
std::vector<Word> foata_normal_form(const FiniteTrace& t);

LetterSet alph(const FiniteTrace& t);
std::size_t length(const FiniteTrace& t);

/// When `s` is a prefix of `t`, returns the unique z with concat(s, z) == t.
std::optional<FiniteTrace> is_prefix(const FiniteTrace& s, const FiniteTrace& t);

/// Lexicographic normal form of the class of `w`, without building a
/// FiniteTrace.
Word normal_form_of(const DependenceAlphabet& da, const Word& w);

/// Throws InputError unless every letter of `w` belongs to `da`.
void require_letters(const DependenceAlphabet& da, const Word& w);

/// Throws InputError when the two traces live over different alphabets.
void require_same_alphabet(const FiniteTrace& s, const FiniteTrace& t);

}  // namespace realtrace
