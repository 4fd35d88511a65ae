#include "realtrace/automaton.hpp"

#include <algorithm>
#include <deque>

#include "realtrace/errors.hpp"

namespace realtrace {

Automaton::Automaton(Alphabet alphabet, Acceptance mode) : alphabet_(std::move(alphabet)), mode_(mode) {}

State Automaton::add_state(std::string name) {
  const auto s = static_cast<State>(out_.size());
  names_.push_back(name.empty() ? "q" + std::to_string(s) : std::move(name));
  out_.emplace_back();
  initial_.push_back(0);
  accepting_.push_back(0);
  return s;
}

void Automaton::set_initial(State s, bool value) { initial_.at(s) = value ? 1 : 0; }

void Automaton::set_accepting(State s, bool value) { accepting_.at(s) = value ? 1 : 0; }

void Automaton::add_transition(State from, Letter letter, State to) {
  if (from >= num_states() || to >= num_states()) throw InputError("transition names an unknown state");
  if (letter >= alphabet_.size()) throw InputError("transition names an unknown letter");
  auto& edges = out_[from];
  const Transition t{letter, to};
  if (std::find(edges.begin(), edges.end(), t) == edges.end()) edges.push_back(t);
}

std::vector<State> Automaton::initial_states() const {
  std::vector<State> out;
  for (State s = 0; s < num_states(); ++s)
    if (initial_[s]) out.push_back(s);
  return out;
}

std::vector<State> Automaton::accepting_states() const {
  std::vector<State> out;
  for (State s = 0; s < num_states(); ++s)
    if (accepting_[s]) out.push_back(s);
  return out;
}

std::size_t Automaton::num_transitions() const {
  std::size_t n = 0;
  for (const auto& e : out_) n += e.size();
  return n;
}

bool Automaton::is_deterministic() const {
  if (initial_states().size() > 1) return false;
  for (const auto& edges : out_) {
    std::vector<char> seen(alphabet_.size(), 0);
    for (const Transition& t : edges) {
      if (seen[t.letter]) return false;
      seen[t.letter] = 1;
    }
  }
  return true;
}

Automaton Automaton::relabeled(const Alphabet& target) const {
  std::vector<Letter> map(alphabet_.size());
  for (Letter a = 0; a < alphabet_.size(); ++a) {
    auto b = target.find(alphabet_.symbol(a));
    if (!b) throw InputError("letter '" + alphabet_.symbol(a) + "' is not in the target alphabet");
    map[a] = *b;
  }
  Automaton r(target, mode_);
  for (State s = 0; s < num_states(); ++s) {
    r.add_state(names_[s]);
    r.set_initial(s, is_initial(s));
    r.set_accepting(s, is_accepting(s));
  }
  for (State s = 0; s < num_states(); ++s)
    for (const Transition& t : out_[s]) r.add_transition(s, map[t.letter], t.target);
  return r;
}

std::vector<bool> reachable_states(const Automaton& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::deque<State> queue;
  for (State s : a.initial_states()) {
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (const Transition& t : a.out(s))
      if (!seen[t.target]) {
        seen[t.target] = true;
        queue.push_back(t.target);
      }
  }
  return seen;
}

Automaton restrict_states(const Automaton& a, const std::vector<bool>& keep) {
  std::vector<State> map(a.num_states(), 0);
  Automaton r(a.alphabet(), a.mode());
  for (State s = 0; s < a.num_states(); ++s) {
    if (!keep[s]) continue;
    map[s] = r.add_state(a.state_name(s));
    r.set_initial(map[s], a.is_initial(s));
    r.set_accepting(map[s], a.is_accepting(s));
  }
  for (State s = 0; s < a.num_states(); ++s) {
    if (!keep[s]) continue;
    for (const Transition& t : a.out(s))
      if (keep[t.target]) r.add_transition(map[s], t.letter, map[t.target]);
  }
  return r;
}

}  // namespace realtrace
