#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "realtrace/alphabet.hpp"

namespace realtrace {

using State = std::uint32_t;

/// How the accepting set is read: as final states of finite runs, or as
/// states that must recur infinitely often (Büchi).
enum class Acceptance { finite, buchi };

struct Transition {
  Letter letter;
  State target;
  bool operator==(const Transition&) const = default;
};

/// A nondeterministic automaton without epsilon moves. The same structure
/// serves finite-word automata and Büchi automata; `mode()` records the
/// intended reading and drives the text format.
class Automaton {
 public:
  explicit Automaton(Alphabet alphabet, Acceptance mode = Acceptance::buchi);

  const Alphabet& alphabet() const { return alphabet_; }
  Acceptance mode() const { return mode_; }
  void set_mode(Acceptance m) { mode_ = m; }

  State add_state(std::string name = {});
  void set_initial(State s, bool value = true);
  void set_accepting(State s, bool value = true);
  /// Duplicate transitions are ignored. Throws InputError on unknown
  /// states or letters.
  void add_transition(State from, Letter letter, State to);

  std::size_t num_states() const { return out_.size(); }
  const std::string& state_name(State s) const { return names_.at(s); }
  const std::vector<Transition>& out(State s) const { return out_.at(s); }
  bool is_initial(State s) const { return initial_.at(s) != 0; }
  bool is_accepting(State s) const { return accepting_.at(s) != 0; }
  std::vector<State> initial_states() const;
  std::vector<State> accepting_states() const;
  std::size_t num_transitions() const;

  /// At most one initial state and one successor per (state, letter).
  bool is_deterministic() const;

  /// The same automaton with letters renumbered into `target`, which must
  /// contain every symbol of this automaton's alphabet.
  Automaton relabeled(const Alphabet& target) const;

 private:
  Alphabet alphabet_;
  Acceptance mode_;
  std::vector<std::string> names_;
  std::vector<std::vector<Transition>> out_;
  std::vector<char> initial_;
  std::vector<char> accepting_;
};

/// States reachable from an initial state.
std::vector<bool> reachable_states(const Automaton& a);

/// The sub-automaton on the states marked in `keep`, renumbered densely in
/// their original order.
Automaton restrict_states(const Automaton& a, const std::vector<bool>& keep);

}  // namespace realtrace
