#include "realtrace/testing/fixtures.hpp"

namespace realtrace::fixture {

AlphabetRef da3() { return validate_alphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

const Alphabet& binary() {
  static const Alphabet alphabet({"0", "1"});
  return alphabet;
}

Automaton zero_star_one() {
  Automaton a(binary(), Acceptance::buchi);
  const State s0 = a.add_state("s0");
  const State s1 = a.add_state("s1");
  a.set_initial(s0);
  a.set_accepting(s1);
  a.add_transition(s0, 0, s0);
  a.add_transition(s0, 1, s1);
  a.add_transition(s1, 0, s0);
  a.add_transition(s1, 1, s1);
  return a;
}

Automaton zero_star_one_plus() {
  Automaton a = zero_star_one();
  a.set_mode(Acceptance::finite);
  return a;
}

Automaton starts_with_one() {
  Automaton a(binary(), Acceptance::buchi);
  const State s0 = a.add_state("s0");
  const State s1 = a.add_state("s1");
  a.set_initial(s0);
  a.set_accepting(s1);
  a.add_transition(s0, 1, s1);
  a.add_transition(s1, 0, s1);
  a.add_transition(s1, 1, s1);
  return a;
}

sigma11::FiniteTree sample_tree() { return sigma11::FiniteTree({{0}, {1, 0}, {1, 1, 1, 1}}); }

sigma11::RegularTree constant_tree(Letter label) {
  return sigma11::RegularTree(binary(), {"p"}, 0, {{0, 0}}, {label});
}

sigma11::RegularTree parity_tree() {
  return sigma11::RegularTree(binary(), {"even", "odd"}, 0, {{1, 1}, {0, 0}}, {0, 1});
}

}  // namespace realtrace::fixture
