#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <vector>

#include "realtrace/automaton.hpp"
#include "realtrace/decompose.hpp"
#include "realtrace/dependence.hpp"
#include "realtrace/trace.hpp"

namespace realtrace {

/// A finite union of phi(U) . phi(V)^omega over a dependence alphabet.
/// Every V is nonempty-word-only and monoalphabetic; since alph is
/// invariant under commutation, so is phi(L(V)).
struct RationalTraceLanguage {
  AlphabetRef alphabet;
  std::vector<DecompositionComponent> components;
};

/// phi(L(a)) as a union of monoalphabetic components. `a` may use any
/// subset of the alphabet's letters; it is relabeled onto the alphabet.
RationalTraceLanguage from_buchi(const AlphabetRef& da, const Automaton& a);

/// A bijective enumeration psi of the trace language phi(L(source)).
///
/// Traces are listed in length-lexicographic order of their normal forms,
/// without repetition. The table is filled on demand; concurrent calls are
/// serialized by an internal mutex.
class TraceEnumeration {
 public:
  TraceEnumeration(AlphabetRef da, const Automaton& source);
  TraceEnumeration(const TraceEnumeration&) = delete;
  TraceEnumeration& operator=(const TraceEnumeration&) = delete;

  /// psi(i). Throws PreconditionError when the language is finite and
  /// has at most i traces.
  FiniteTrace at(std::size_t i) const;

  /// Number of traces when the language is finite, nothing otherwise.
  std::optional<std::size_t> cardinality() const;
  bool finite() const { return finite_; }
  const AlphabetRef& alphabet() const { return alphabet_; }

 private:
  // Appends the traces of the next length; false once a finite language
  // is exhausted.
  bool extend_locked() const;

  AlphabetRef alphabet_;
  Automaton source_;
  bool finite_;
  std::size_t max_length_;

  mutable std::mutex mutex_;
  mutable std::vector<FiniteTrace> table_;
  mutable std::size_t next_length_ = 0;
};

/// psi(n1) . psi(n2) ... psi(nm).
FiniteTrace h_map_prefix(const TraceEnumeration& e, const std::vector<std::size_t>& indices);

/// Compares the prefixes of size <= k of H(N) and H(M) for index sequences
/// agreeing on their first k entries. For a monoalphabetic S this always
/// holds; for other S it can fail, which is the point of the hypothesis.
/// Throws PreconditionError unless both sequences have length >= k+1 and
/// agree on the first k entries.
bool h_continuity_check(const TraceEnumeration& e, const std::vector<std::size_t>& n,
                        const std::vector<std::size_t>& m, std::size_t k);

}  // namespace realtrace
