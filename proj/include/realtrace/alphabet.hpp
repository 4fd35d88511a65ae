#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace realtrace {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Letter masks are 64 bits wide, so no alphabet may exceed this.
inline constexpr std::size_t kMaxLetters = 64;

/// A set of letters of one alphabet, stored as a bit mask.
class LetterSet {
 public:
  constexpr LetterSet() = default;
  static constexpr LetterSet from_mask(std::uint64_t mask) {
    LetterSet s;
    s.mask_ = mask;
    return s;
  }

  constexpr bool contains(Letter a) const { return (mask_ >> a) & 1U; }
  constexpr void insert(Letter a) { mask_ |= std::uint64_t{1} << a; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool subset_of(LetterSet other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<Letter> letters() const;

  constexpr LetterSet operator|(LetterSet o) const { return from_mask(mask_ | o.mask_); }
  constexpr LetterSet operator&(LetterSet o) const { return from_mask(mask_ & o.mask_); }
  constexpr bool operator==(const LetterSet&) const = default;
  constexpr auto operator<=>(const LetterSet&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

LetterSet letters_of(const Word& w);

/// An ordered finite set of symbols. Letters are indices into the
/// declaration order, which is also the order used for normal forms.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws InputError on empty or duplicate symbols, symbols containing
  /// whitespace or parentheses, or more than kMaxLetters symbols.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Letter> find(std::string_view symbol) const;
  Letter letter(std::string_view symbol) const;  // throws InputError
  LetterSet all() const;

  /// Parses a word. Whitespace-separated tokens are looked up one by one;
  /// a string without whitespace is split by longest symbol match. "" and
  /// "ε" denote the empty word.
  Word parse_word(std::string_view text) const;

  /// Concatenates single-character symbols, otherwise separates with
  /// spaces. The empty word prints as "ε".
  std::string format(const Word& w) const;
  std::string format(LetterSet s) const;

  bool single_char_symbols() const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Letter> index_;
};

}  // namespace realtrace
