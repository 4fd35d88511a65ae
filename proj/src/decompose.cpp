#include "realtrace/decompose.hpp"

#include <map>

#include "realtrace/errors.hpp"
#include "realtrace/nfa.hpp"

namespace realtrace {

namespace {

// Product of `a` with a tracker of the letters read so far, limited to
// letters in `allowed`. Starts from `starts` with the empty set and accepts
// at (target, exactly `wanted`).
Automaton letter_tracking_product(const Automaton& a, const std::vector<State>& starts, State target,
                                  LetterSet allowed, LetterSet wanted) {
  Automaton p(a.alphabet(), Acceptance::finite);
  std::map<std::pair<State, std::uint64_t>, State> index;
  std::vector<std::pair<State, std::uint64_t>> pending;
  auto intern = [&](State q, LetterSet seen) {
    auto [it, inserted] = index.emplace(std::pair{q, seen.mask()}, 0);
    if (inserted) {
      it->second = p.add_state(a.state_name(q) + a.alphabet().format(seen));
      p.set_accepting(it->second, q == target && seen == wanted);
      pending.emplace_back(q, seen.mask());
    }
    return it->second;
  };
  for (State s : starts) p.set_initial(intern(s, LetterSet{}));
  while (!pending.empty()) {
    const auto [q, mask] = pending.back();
    pending.pop_back();
    const State from = index.at({q, mask});
    for (const Transition& t : a.out(q)) {
      if (!allowed.contains(t.letter)) continue;
      LetterSet seen = LetterSet::from_mask(mask);
      seen.insert(t.letter);
      p.add_transition(from, t.letter, intern(t.target, seen));
    }
  }
  return trim(p);
}

std::vector<LetterSet> subsets_of(LetterSet all) {
  std::vector<LetterSet> out;
  const std::uint64_t m = all.mask();
  // Enumerate submasks in increasing numeric order.
  for (std::uint64_t s = 0;; s = (s - m) & m) {
    out.push_back(LetterSet::from_mask(s));
    if (((s - m) & m) == 0) break;
  }
  return out;
}

}  // namespace

std::vector<DecompositionComponent> decompose_monoalphabetic(const Automaton& a) {
  if (a.alphabet().size() > 16) throw PreconditionError("decomposition is limited to 16 letters");
  const auto subsets = subsets_of(a.alphabet().all());
  const auto initial = a.initial_states();
  std::vector<DecompositionComponent> out;
  for (State q : a.accepting_states()) {
    std::vector<std::pair<LetterSet, Automaton>> prefixes;
    std::vector<std::pair<LetterSet, Automaton>> periods;
    for (LetterSet s : subsets) {
      Automaton u = letter_tracking_product(a, initial, q, s, s);
      if (u.num_states() > 0) prefixes.emplace_back(s, std::move(u));
      if (s.empty()) continue;
      Automaton v = letter_tracking_product(a, {q}, q, s, s);
      if (v.num_states() > 0) periods.emplace_back(s, std::move(v));
    }
    for (const auto& [us, u] : prefixes)
      for (const auto& [vs, v] : periods) out.push_back({q, us, vs, u, v});
  }
  return out;
}

Automaton build_omega_from_pair(const Automaton& u, const Automaton& v) {
  if (!(u.alphabet() == v.alphabet())) throw InputError("U and V must share an alphabet");
  if (accepts_empty_word(v)) throw InputError("V accepts the empty word");
  // States: U's, then V's, then a hub marking the end of each V-block.
  Automaton r(u.alphabet(), Acceptance::buchi);
  const State v0 = static_cast<State>(u.num_states());
  for (State q = 0; q < u.num_states(); ++q) r.set_initial(r.add_state("u." + u.state_name(q)), u.is_initial(q));
  for (State q = 0; q < v.num_states(); ++q) r.add_state("v." + v.state_name(q));
  const State hub = r.add_state("hub");
  r.set_accepting(hub);
  r.set_initial(hub, accepts_empty_word(u));
  for (State q = 0; q < u.num_states(); ++q)
    for (const Transition& t : u.out(q)) {
      r.add_transition(q, t.letter, t.target);
      if (u.is_accepting(t.target)) r.add_transition(q, t.letter, hub);
    }
  for (State q = 0; q < v.num_states(); ++q)
    for (const Transition& t : v.out(q)) {
      r.add_transition(v0 + q, t.letter, v0 + t.target);
      if (v.is_accepting(t.target)) r.add_transition(v0 + q, t.letter, hub);
    }
  for (State q : v.initial_states())
    for (const Transition& t : v.out(q)) {
      r.add_transition(hub, t.letter, v0 + t.target);
      if (v.is_accepting(t.target)) r.add_transition(hub, t.letter, hub);
    }
  return r;
}

}  // namespace realtrace
