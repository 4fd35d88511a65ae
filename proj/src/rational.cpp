#include "realtrace/rational.hpp"

#include <set>

#include "realtrace/errors.hpp"
#include "realtrace/metric.hpp"
#include "realtrace/nfa.hpp"

namespace realtrace {

RationalTraceLanguage from_buchi(const AlphabetRef& da, const Automaton& a) {
  return {da, decompose_monoalphabetic(a.relabeled(da->letters()))};
}

TraceEnumeration::TraceEnumeration(AlphabetRef da, const Automaton& source)
    : alphabet_(std::move(da)), source_(trim(source.relabeled(alphabet_->letters()))) {
  finite_ = is_finite_language(source_);
  // An acyclic trimmed automaton accepts no word longer than its state count.
  max_length_ = source_.num_states();
}

bool TraceEnumeration::extend_locked() const {
  if (source_.num_states() == 0) return false;
  if (finite_ && next_length_ > max_length_) return false;
  std::set<Word> forms;
  for (const Word& w : accepted_words_of_length(source_, next_length_)) forms.insert(normal_form_of(*alphabet_, w));
  for (const Word& nf : forms) table_.push_back(phi_word(alphabet_, nf));
  ++next_length_;
  return true;
}

FiniteTrace TraceEnumeration::at(std::size_t i) const {
  std::lock_guard lock(mutex_);
  while (table_.size() <= i)
    if (!extend_locked()) throw PreconditionError("index " + std::to_string(i) + " out of range for a finite language");
  return table_[i];
}

std::optional<std::size_t> TraceEnumeration::cardinality() const {
  if (!finite_) return std::nullopt;
  std::lock_guard lock(mutex_);
  while (extend_locked()) {
  }
  return table_.size();
}

FiniteTrace h_map_prefix(const TraceEnumeration& e, const std::vector<std::size_t>& indices) {
  FiniteTrace out = FiniteTrace::empty_trace(e.alphabet());
  for (std::size_t i : indices) out = concat(out, e.at(i));
  return out;
}

bool h_continuity_check(const TraceEnumeration& e, const std::vector<std::size_t>& n,
                        const std::vector<std::size_t>& m, std::size_t k) {
  if (n.size() < k + 1 || m.size() < k + 1) throw PreconditionError("index sequences must have length at least k+1");
  for (std::size_t i = 0; i < k; ++i)
    if (n[i] != m[i]) throw PreconditionError("index sequences must agree on their first k entries");
  return enumerate_prefixes(h_map_prefix(e, n), k) == enumerate_prefixes(h_map_prefix(e, m), k);
}

}  // namespace realtrace
