#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "realtrace/alphabet.hpp"

namespace realtrace {

/// An ultimately periodic infinite word stem . loop^omega.
///
/// Stored in canonical form: the loop is its own primitive root, and the
/// stem is as short as possible (the loop is rolled backward while the last
/// stem letter equals the last loop letter). Two values denote the same
/// infinite word iff they compare equal.
class UPWord {
 public:
  /// Throws InputError when `loop` is empty.
  UPWord(Word stem, Word loop);

  const Word& stem() const { return stem_; }
  const Word& loop() const { return loop_; }

  Letter at(std::size_t i) const {
    return i < stem_.size() ? stem_[i] : loop_[(i - stem_.size()) % loop_.size()];
  }
  /// The first n letters.
  Word prefix(std::size_t n) const;
  LetterSet letters() const { return letters_of(stem_) | letters_of(loop_); }

  bool operator==(const UPWord&) const = default;

 private:
  Word stem_;
  Word loop_;
};

/// Parses `u(v)`, e.g. `0(10)` for 0.(10)^omega, against `alphabet`.
UPWord parse_upword(const Alphabet& alphabet, std::string_view text);
std::string format_upword(const Alphabet& alphabet, const UPWord& x);

}  // namespace realtrace
