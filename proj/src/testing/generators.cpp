#include "realtrace/testing/generators.hpp"

namespace realtrace::gen {

Word word(Rng& rng, std::size_t letters, std::size_t length) {
  Word w(length);
  for (Letter& a : w) a = static_cast<Letter>(rng.below(letters));
  return w;
}

Word word_up_to(Rng& rng, std::size_t letters, std::size_t max_len) {
  return word(rng, letters, rng.between(0, max_len));
}

Word word_with_letters(Rng& rng, LetterSet alphabet, std::size_t length) {
  const std::vector<Letter> letters = alphabet.letters();
  Word w = letters;
  while (w.size() < length) w.push_back(letters[rng.below(letters.size())]);
  // Fisher-Yates with our own draws.
  for (std::size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[rng.below(i)]);
  return w;
}

UPWord up_word(Rng& rng, std::size_t letters, std::size_t max_stem, std::size_t max_loop) {
  Word stem = word_up_to(rng, letters, max_stem);
  Word loop = word(rng, letters, rng.between(1, max_loop));
  return UPWord(std::move(stem), std::move(loop));
}

Automaton buchi(Rng& rng, const Alphabet& alphabet, std::size_t max_states) {
  Automaton a(alphabet, Acceptance::buchi);
  const std::size_t n = rng.between(1, max_states);
  for (std::size_t i = 0; i < n; ++i) a.add_state();
  a.set_initial(0);
  for (State s = 1; s < n; ++s)
    if (rng.chance(1, 4)) a.set_initial(s);
  for (State s = 0; s < n; ++s)
    if (rng.chance(2, 5)) a.set_accepting(s);
  for (State s = 0; s < n; ++s)
    for (Letter c = 0; c < alphabet.size(); ++c) {
      const std::size_t succ = rng.below(3);
      for (std::size_t i = 0; i < succ; ++i) a.add_transition(s, c, static_cast<State>(rng.below(n)));
    }
  return a;
}

sigma11::FiniteTree finite_tree(Rng& rng, std::size_t depth, std::size_t labels) {
  std::vector<Word> levels;
  for (std::size_t n = 0; n <= depth; ++n) levels.push_back(word(rng, labels, std::size_t{1} << n));
  return sigma11::FiniteTree(std::move(levels));
}

sigma11::FiniteTree agreeing_below(Rng& rng, const sigma11::FiniteTree& t, std::size_t k, std::size_t labels) {
  std::vector<Word> levels;
  for (std::size_t n = 0; n <= t.depth(); ++n)
    levels.push_back(n < k ? t.level(n) : word(rng, labels, std::size_t{1} << n));
  return sigma11::FiniteTree(std::move(levels));
}

sigma11::RegularTree regular_tree(Rng& rng, const Alphabet& labels, std::size_t max_states) {
  const std::size_t n = rng.between(1, max_states);
  std::vector<std::string> names;
  std::vector<std::array<State, 2>> next;
  std::vector<Letter> output;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    next.push_back({static_cast<State>(rng.below(n)), static_cast<State>(rng.below(n))});
    output.push_back(static_cast<Letter>(rng.below(labels.size())));
  }
  return sigma11::RegularTree(labels, std::move(names), 0, std::move(next), std::move(output));
}

}  // namespace realtrace::gen
