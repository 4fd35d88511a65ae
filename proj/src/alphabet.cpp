#include "realtrace/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "realtrace/errors.hpp"

namespace realtrace {

namespace {

constexpr std::string_view kEpsilon = "ε";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Letter> LetterSet::letters() const {
  std::vector<Letter> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<Letter>(std::countr_zero(m)));
  return out;
}

LetterSet letters_of(const Word& w) {
  LetterSet s;
  for (Letter a : w) s.insert(a);
  return s;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() > kMaxLetters) throw InputError("alphabet has more than 64 letters");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty()) throw InputError("empty letter symbol");
    if (s == kEpsilon) throw InputError("'ε' is reserved for the empty word");
    if (std::any_of(s.begin(), s.end(), [](char c) { return is_space(c) || c == '(' || c == ')'; }))
      throw InputError("letter symbol '" + s + "' contains whitespace or parentheses");
    if (!index_.emplace(s, static_cast<Letter>(i)).second) throw InputError("duplicate letter '" + s + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::letter(std::string_view symbol) const {
  if (auto a = find(symbol)) return *a;
  throw InputError("unknown letter '" + std::string(symbol) + "'");
}

LetterSet Alphabet::all() const {
  return LetterSet::from_mask(size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1);
}

bool Alphabet::single_char_symbols() const {
  return std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& s) { return s.size() == 1; });
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  const bool spaced = std::any_of(text.begin(), text.end(), is_space);
  if (spaced) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) ++i;
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) ++j;
      if (j > i) {
        std::string_view tok = text.substr(i, j - i);
        if (tok != kEpsilon) w.push_back(letter(tok));
      }
      i = j;
    }
    return w;
  }
  if (text == kEpsilon) return w;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t best = 0;
    Letter best_letter = 0;
    for (std::size_t a = 0; a < symbols_.size(); ++a) {
      const std::string& s = symbols_[a];
      if (s.size() > best && text.substr(i, s.size()) == s) {
        best = s.size();
        best_letter = static_cast<Letter>(a);
      }
    }
    if (best == 0) throw InputError("unknown letter at '" + std::string(text.substr(i)) + "'");
    w.push_back(best_letter);
    i += best;
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return std::string(kEpsilon);
  const bool compact = single_char_symbols();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += symbol(w[i]);
  }
  return out;
}

std::string Alphabet::format(LetterSet s) const {
  std::string out = "{";
  bool first = true;
  for (Letter a : s.letters()) {
    if (!first) out += ',';
    out += symbol(a);
    first = false;
  }
  return out + "}";
}

}  // namespace realtrace
