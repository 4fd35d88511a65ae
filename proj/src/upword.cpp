#include "realtrace/upword.hpp"

#include <algorithm>

#include "realtrace/errors.hpp"

namespace realtrace {

namespace {

Word primitive_root(const Word& v) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = v[i] == v[i - p];
    if (periodic) return Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return v;
}

}  // namespace

UPWord::UPWord(Word stem, Word loop) : stem_(std::move(stem)), loop_(std::move(loop)) {
  if (loop_.empty()) throw InputError("ultimately periodic word needs a nonempty loop");
  loop_ = primitive_root(loop_);
  while (!stem_.empty() && stem_.back() == loop_.back()) {
    stem_.pop_back();
    std::rotate(loop_.rbegin(), loop_.rbegin() + 1, loop_.rend());
  }
}

Word UPWord::prefix(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
  return w;
}

UPWord parse_upword(const Alphabet& alphabet, std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      close + 1 != text.find_last_not_of(" \t") + 1)
    throw InputError("ultimately periodic word must look like u(v), got '" + std::string(text) + "'");
  Word stem = alphabet.parse_word(text.substr(0, open));
  Word loop = alphabet.parse_word(text.substr(open + 1, close - open - 1));
  return UPWord(std::move(stem), std::move(loop));
}

std::string format_upword(const Alphabet& alphabet, const UPWord& x) {
  std::string stem = x.stem().empty() ? "" : alphabet.format(x.stem());
  if (!stem.empty() && !alphabet.single_char_symbols()) stem += ' ';
  return stem + "(" + alphabet.format(x.loop()) + ")";
}

}  // namespace realtrace
