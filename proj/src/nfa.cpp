#include "realtrace/nfa.hpp"

#include <algorithm>
#include <map>

#include "realtrace/errors.hpp"

namespace realtrace {

namespace {

using StateSet = std::vector<char>;

StateSet initial_set(const Automaton& a) {
  StateSet s(a.num_states(), 0);
  for (State q : a.initial_states()) s[q] = 1;
  return s;
}

StateSet step(const Automaton& a, const StateSet& from, Letter letter) {
  StateSet to(a.num_states(), 0);
  for (State q = 0; q < a.num_states(); ++q) {
    if (!from[q]) continue;
    for (const Transition& t : a.out(q))
      if (t.letter == letter) to[t.target] = 1;
  }
  return to;
}

bool any_accepting(const Automaton& a, const StateSet& s) {
  for (State q = 0; q < a.num_states(); ++q)
    if (s[q] && a.is_accepting(q)) return true;
  return false;
}

bool any(const StateSet& s) { return std::find(s.begin(), s.end(), 1) != s.end(); }

std::vector<bool> coreachable(const Automaton& a) {
  std::vector<bool> co(a.num_states(), false);
  for (State q : a.accepting_states()) co[q] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (State q = 0; q < a.num_states(); ++q) {
      if (co[q]) continue;
      for (const Transition& t : a.out(q))
        if (co[t.target]) {
          co[q] = changed = true;
          break;
        }
    }
  }
  return co;
}

}  // namespace

bool nfa_accepts(const Automaton& a, const Word& w) {
  StateSet cur = initial_set(a);
  for (Letter x : w) {
    if (x >= a.alphabet().size()) throw InputError("word letter outside the automaton alphabet");
    cur = step(a, cur, x);
  }
  return any_accepting(a, cur);
}

bool accepts_empty_word(const Automaton& a) { return any_accepting(a, initial_set(a)); }

Automaton trim(const Automaton& a) {
  const auto reach = reachable_states(a);
  const auto co = coreachable(a);
  std::vector<bool> keep(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) keep[q] = reach[q] && co[q];
  return restrict_states(a, keep);
}

bool nfa_is_empty(const Automaton& a) { return trim(a).num_states() == 0; }

bool is_finite_language(const Automaton& a) {
  const Automaton t = trim(a);
  // Kahn on the state graph: a cycle leaves some state with positive indegree.
  std::vector<std::size_t> indegree(t.num_states(), 0);
  for (State q = 0; q < t.num_states(); ++q)
    for (const Transition& e : t.out(q)) ++indegree[e.target];
  std::vector<State> ready;
  for (State q = 0; q < t.num_states(); ++q)
    if (indegree[q] == 0) ready.push_back(q);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const State q = ready.back();
    ready.pop_back();
    ++removed;
    for (const Transition& e : t.out(q))
      if (--indegree[e.target] == 0) ready.push_back(e.target);
  }
  return removed == t.num_states();
}

Automaton determinize(const Automaton& a) {
  Automaton d(a.alphabet(), a.mode());
  std::map<StateSet, State> index;
  std::vector<StateSet> pending;
  auto intern = [&](const StateSet& s) {
    auto [it, inserted] = index.emplace(s, 0);
    if (inserted) {
      std::string name = "{";
      for (State q = 0; q < a.num_states(); ++q)
        if (s[q]) name += (name.size() > 1 ? "," : "") + a.state_name(q);
      it->second = d.add_state(name + "}");
      d.set_accepting(it->second, any_accepting(a, s));
      pending.push_back(s);
    }
    return it->second;
  };
  const StateSet init = initial_set(a);
  if (!any(init)) return d;
  d.set_initial(intern(init));
  while (!pending.empty()) {
    const StateSet s = pending.back();
    pending.pop_back();
    const State from = index.at(s);
    for (Letter x = 0; x < a.alphabet().size(); ++x) {
      StateSet t = step(a, s, x);
      if (any(t)) d.add_transition(from, x, intern(t));
    }
  }
  return d;
}

Automaton from_words(const Alphabet& alphabet, const std::vector<Word>& words, Acceptance mode) {
  Automaton a(alphabet, mode);
  const State root = a.add_state();
  a.set_initial(root);
  std::map<std::pair<State, Letter>, State> child;
  for (const Word& w : words) {
    State cur = root;
    for (Letter x : w) {
      auto it = child.find({cur, x});
      if (it == child.end()) {
        const State next = a.add_state();
        a.add_transition(cur, x, next);
        it = child.emplace(std::pair{cur, x}, next).first;
      }
      cur = it->second;
    }
    a.set_accepting(cur);
  }
  return a;
}

std::vector<Word> accepted_words_of_length(const Automaton& a, std::size_t length) {
  // Depth-first in letter order over subsets, pruned to states that can
  // still reach acceptance.
  const auto co = coreachable(a);
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self, const StateSet& cur) -> void {
    if (w.size() == length) {
      if (any_accepting(a, cur)) out.push_back(w);
      return;
    }
    for (Letter x = 0; x < a.alphabet().size(); ++x) {
      StateSet next = step(a, cur, x);
      bool live = false;
      for (State q = 0; q < a.num_states(); ++q) {
        if (next[q] && !co[q]) next[q] = 0;
        live = live || next[q];
      }
      if (!live) continue;
      w.push_back(x);
      self(self, next);
      w.pop_back();
    }
  };
  rec(rec, initial_set(a));
  return out;
}

}  // namespace realtrace
