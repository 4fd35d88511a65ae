#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "realtrace/trace.hpp"
#include "realtrace/upword.hpp"

namespace realtrace {

// Ideal enumeration works on 64-bit vertex masks.
inline constexpr std::size_t kMaxIdealVertices = 64;

/// Length of agreement of two objects' prefix sets, computed up to `cap`.
/// `value` is empty when the objects agree on every prefix of size <= cap.
struct PrefixAgreement {
  std::optional<std::size_t> value;
  std::size_t cap = 0;

  bool saturated() const { return !value.has_value(); }
  /// The agreement with saturation read as `cap`.
  std::size_t at_least() const { return value.value_or(cap); }
  std::string to_string() const;

  bool operator==(const PrefixAgreement&) const = default;
};

/// The distance 2^-l as an exact dyadic rational. When the agreement
/// saturated, only the closed interval [0, 2^-cap] is known.
struct DyadicDistance {
  std::size_t exponent = 0;
  bool upper_bound_only = false;

  std::string to_string() const;
  bool operator==(const DyadicDistance&) const = default;
};

/// Order ideals of `t` as 64-bit vertex masks, grouped by size 0..max_size.
/// Vertex i is position i of t's normal form. Throws PreconditionError when
/// t exceeds kMaxIdealVertices.
std::vector<std::vector<std::uint64_t>> ideal_levels(const FiniteTrace& t, std::size_t max_size);

/// All prefixes r of t with |r| <= n.
std::set<FiniteTrace> enumerate_prefixes(const FiniteTrace& t, std::size_t n);

/// Largest n <= cap with enumerate_prefixes(s, n) == enumerate_prefixes(t, n).
PrefixAgreement l_pref(const FiniteTrace& s, const FiniteTrace& t, std::size_t cap);

DyadicDistance d_pref(const FiniteTrace& s, const FiniteTrace& t, std::size_t cap);

/// Longest common prefix length of finite or ultimately periodic words,
/// capped. A finite word that is a proper prefix of the other ends the
/// agreement at its length.
PrefixAgreement word_l_pref(const Word& u, const Word& v, std::size_t cap);
PrefixAgreement word_l_pref(const UPWord& u, const UPWord& v, std::size_t cap);
PrefixAgreement word_l_pref(const Word& u, const UPWord& v, std::size_t cap);
PrefixAgreement word_l_pref(const UPWord& u, const Word& v, std::size_t cap);

DyadicDistance distance_of(const PrefixAgreement& l);

}  // namespace realtrace
