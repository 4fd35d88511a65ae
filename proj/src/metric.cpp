#include "realtrace/metric.hpp"

#include <algorithm>

#include "realtrace/errors.hpp"

namespace realtrace {

namespace {

// below[j]: mask of all vertices strictly below j in the dependence order.
std::vector<std::uint64_t> strict_downsets(const FiniteTrace& t) {
  const Word& w = t.normal_form();
  const DependenceAlphabet& da = *t.alphabet();
  std::vector<std::uint64_t> below(w.size(), 0);
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (da.depends(w[i], w[j])) below[j] |= below[i] | (std::uint64_t{1} << i);
  return below;
}

Word subword(const Word& w, std::uint64_t mask) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if ((mask >> i) & 1U) out.push_back(w[i]);
  return out;
}

// Normal forms of the prefixes of one size.
std::set<Word> prefix_forms(const FiniteTrace& t, const std::vector<std::uint64_t>& ideals) {
  std::set<Word> out;
  for (std::uint64_t m : ideals) out.insert(normal_form_of(*t.alphabet(), subword(t.normal_form(), m)));
  return out;
}

void require_metric_alphabet(const FiniteTrace& t) { require_no_isolated(*t.alphabet()); }

template <typename AtU, typename AtV>
PrefixAgreement common_prefix(AtU at_u, AtV at_v, std::size_t cap) {
  for (std::size_t i = 0; i < cap; ++i) {
    const auto a = at_u(i);
    const auto b = at_v(i);
    if (!a && !b) return {std::nullopt, cap};  // equal finite words
    if (a != b) return {i, cap};
  }
  return {std::nullopt, cap};
}

auto finite_at(const Word& w) {
  return [&w](std::size_t i) -> std::optional<Letter> {
    if (i < w.size()) return w[i];
    return std::nullopt;
  };
}

auto infinite_at(const UPWord& x) {
  return [&x](std::size_t i) -> std::optional<Letter> { return x.at(i); };
}

}  // namespace

std::string PrefixAgreement::to_string() const {
  return value ? std::to_string(*value) : ">=" + std::to_string(cap);
}

std::string DyadicDistance::to_string() const {
  std::string exact = "1";
  if (exponent >= 63)
    exact = "1/2^" + std::to_string(exponent);
  else if (exponent > 0)
    exact = "1/" + std::to_string(std::uint64_t{1} << exponent);
  return upper_bound_only ? "[0," + exact + "]" : exact;
}

DyadicDistance distance_of(const PrefixAgreement& l) { return {l.at_least(), l.saturated()}; }

std::vector<std::vector<std::uint64_t>> ideal_levels(const FiniteTrace& t, std::size_t max_size) {
  if (t.size() > kMaxIdealVertices)
    throw PreconditionError("trace has " + std::to_string(t.size()) + " vertices; ideal enumeration is limited to 64");
  const std::vector<std::uint64_t> below = strict_downsets(t);
  const std::size_t top = std::min(max_size, t.size());
  std::vector<std::vector<std::uint64_t>> levels{{0}};
  // Each ideal of size k+1 is an ideal of size k plus one vertex whose
  // downset it already contains; the sorted-unique pass merges the
  // different orders that reach the same ideal.
  for (std::size_t k = 0; k < top; ++k) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t ideal : levels[k])
      for (std::size_t v = 0; v < t.size(); ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (!(ideal & bit) && (below[v] & ~ideal) == 0) next.push_back(ideal | bit);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

std::set<FiniteTrace> enumerate_prefixes(const FiniteTrace& t, std::size_t n) {
  std::set<FiniteTrace> out;
  for (const auto& level : ideal_levels(t, n))
    for (std::uint64_t m : level) out.insert(phi_word(t.alphabet(), subword(t.normal_form(), m)));
  return out;
}

PrefixAgreement l_pref(const FiniteTrace& s, const FiniteTrace& t, std::size_t cap) {
  require_same_alphabet(s, t);
  require_metric_alphabet(s);
  if (cap < 1) throw PreconditionError("l_pref cap must be at least 1");
  if (s == t) return {std::nullopt, cap};
  const auto ls = ideal_levels(s, cap);
  const auto lt = ideal_levels(t, cap);
  for (std::size_t k = 1; k <= cap; ++k) {
    const std::vector<std::uint64_t> none;
    const auto& a = k < ls.size() ? ls[k] : none;
    const auto& b = k < lt.size() ? lt[k] : none;
    if (a.size() != b.size() || prefix_forms(s, a) != prefix_forms(t, b)) return {k - 1, cap};
  }
  return {std::nullopt, cap};
}

DyadicDistance d_pref(const FiniteTrace& s, const FiniteTrace& t, std::size_t cap) {
  return distance_of(l_pref(s, t, cap));
}

PrefixAgreement word_l_pref(const Word& u, const Word& v, std::size_t cap) {
  return common_prefix(finite_at(u), finite_at(v), cap);
}

PrefixAgreement word_l_pref(const UPWord& u, const UPWord& v, std::size_t cap) {
  if (u == v) return {std::nullopt, cap};
  return common_prefix(infinite_at(u), infinite_at(v), cap);
}

PrefixAgreement word_l_pref(const Word& u, const UPWord& v, std::size_t cap) {
  return common_prefix(finite_at(u), infinite_at(v), cap);
}

PrefixAgreement word_l_pref(const UPWord& u, const Word& v, std::size_t cap) {
  return common_prefix(infinite_at(u), finite_at(v), cap);
}

}  // namespace realtrace
