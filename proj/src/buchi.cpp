#include "realtrace/buchi.hpp"

#include <algorithm>
#include <deque>

#include "realtrace/errors.hpp"
#include "realtrace/nfa.hpp"

namespace realtrace {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Parent {
  std::size_t node = kNone;
  Letter label = 0;
};

// BFS from `sources`; parent[v].node == kNone for unreached nodes that are
// not sources.
std::vector<Parent> bfs(const LassoGraph& g, const std::vector<std::size_t>& sources, std::vector<bool>& seen) {
  std::vector<Parent> parent(g.size());
  std::deque<std::size_t> queue;
  for (std::size_t s : sources)
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const LassoEdge& e : g[v])
      if (!seen[e.target]) {
        seen[e.target] = true;
        parent[e.target] = {v, e.label};
        queue.push_back(e.target);
      }
  }
  return parent;
}

Word path_to(const std::vector<Parent>& parent, std::size_t v) {
  Word labels;
  while (parent[v].node != kNone) {
    labels.push_back(parent[v].label);
    v = parent[v].node;
  }
  std::reverse(labels.begin(), labels.end());
  return labels;
}

void check_word(const Automaton& a, const UPWord& x) {
  const LetterSet letters = x.letters();
  if (!letters.subset_of(a.alphabet().all())) throw InputError("word letter outside the automaton alphabet");
}

}  // namespace

std::optional<Lasso> find_lasso(const LassoGraph& graph, const std::vector<std::size_t>& initial,
                                const std::vector<bool>& accepting) {
  std::vector<bool> reached(graph.size(), false);
  const auto parent = bfs(graph, initial, reached);
  for (std::size_t f = 0; f < graph.size(); ++f) {
    if (!reached[f] || !accepting[f]) continue;
    // Search f -> ... -> f with at least one edge.
    std::vector<bool> seen(graph.size(), false);
    std::vector<std::size_t> firsts;
    std::vector<Parent> first_edge(graph.size());
    for (const LassoEdge& e : graph[f]) {
      if (e.target == f) return Lasso{path_to(parent, f), Word{e.label}, f};
      if (!seen[e.target]) {
        seen[e.target] = true;
        firsts.push_back(e.target);
        first_edge[e.target] = {f, e.label};
      }
    }
    // BFS with the first layer already marked; f has no parent entry, so
    // path_to stops there.
    std::deque<std::size_t> queue(firsts.begin(), firsts.end());
    std::vector<Parent> cyc_parent = first_edge;
    std::vector<bool> mark = seen;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const LassoEdge& e : graph[v]) {
        if (e.target == f) {
          Word cycle = path_to(cyc_parent, v);
          cycle.push_back(e.label);
          return Lasso{path_to(parent, f), cycle, f};
        }
        if (!mark[e.target]) {
          mark[e.target] = true;
          cyc_parent[e.target] = {v, e.label};
          queue.push_back(e.target);
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<bool> live_nodes(const LassoGraph& graph, const std::vector<bool>& accepting) {
  const std::size_t n = graph.size();
  // Accepting nodes lying on a cycle.
  std::vector<bool> live(n, false);
  for (std::size_t f = 0; f < n; ++f) {
    if (!accepting[f]) continue;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> succ;
    for (const LassoEdge& e : graph[f]) succ.push_back(e.target);
    bfs(graph, succ, seen);
    live[f] = seen[f];
  }
  // Backward closure.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (live[v]) continue;
      for (const LassoEdge& e : graph[v])
        if (live[e.target]) {
          live[v] = changed = true;
          break;
        }
    }
  }
  return live;
}

LassoGraph graph_of(const Automaton& a) {
  LassoGraph g(a.num_states());
  for (State q = 0; q < a.num_states(); ++q)
    for (const Transition& t : a.out(q)) g[q].push_back({t.letter, t.target});
  return g;
}

bool buchi_accepts(const Automaton& a, const UPWord& x) {
  check_word(a, x);
  const std::size_t positions = x.stem().size() + x.loop().size();
  const std::size_t loop_start = x.stem().size();
  auto node = [&](State q, std::size_t pos) { return q * positions + pos; };
  LassoGraph g(a.num_states() * positions);
  std::vector<bool> accepting(g.size(), false);
  for (State q = 0; q < a.num_states(); ++q)
    for (std::size_t pos = 0; pos < positions; ++pos) {
      accepting[node(q, pos)] = a.is_accepting(q);
      const Letter letter = x.at(pos);
      const std::size_t next = pos + 1 < positions ? pos + 1 : loop_start;
      for (const Transition& t : a.out(q))
        if (t.letter == letter) g[node(q, pos)].push_back({letter, node(t.target, next)});
    }
  std::vector<std::size_t> initial;
  for (State q : a.initial_states()) initial.push_back(node(q, 0));
  return find_lasso(g, initial, accepting).has_value();
}

std::optional<UPWord> buchi_nonempty(const Automaton& a) {
  std::vector<bool> accepting(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) accepting[q] = a.is_accepting(q);
  std::vector<std::size_t> initial;
  for (State q : a.initial_states()) initial.push_back(q);
  auto lasso = find_lasso(graph_of(a), initial, accepting);
  if (!lasso) return std::nullopt;
  return UPWord(std::move(lasso->stem), std::move(lasso->cycle));
}

std::vector<bool> live_states(const Automaton& a) {
  std::vector<bool> accepting(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) accepting[q] = a.is_accepting(q);
  return live_nodes(graph_of(a), accepting);
}

bool is_live_prefix(const Automaton& a, const Word& w) {
  const auto live = live_states(a);
  std::vector<char> cur(a.num_states(), 0);
  for (State q : a.initial_states()) cur[q] = 1;
  for (Letter x : w) {
    if (x >= a.alphabet().size()) throw InputError("word letter outside the automaton alphabet");
    std::vector<char> next(a.num_states(), 0);
    for (State q = 0; q < a.num_states(); ++q)
      if (cur[q])
        for (const Transition& t : a.out(q))
          if (t.letter == x) next[t.target] = 1;
    cur = std::move(next);
  }
  for (State q = 0; q < a.num_states(); ++q)
    if (cur[q] && live[q]) return true;
  return false;
}

Automaton intersect(const Automaton& a, const Automaton& b) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("intersection needs a shared alphabet");
  // Phase 0 waits for an accepting state of a, phase 1 for one of b.
  Automaton p(a.alphabet(), Acceptance::buchi);
  const std::size_t nb = b.num_states();
  auto id = [&](State qa, State qb, int phase) { return static_cast<State>((qa * nb + qb) * 2 + phase); };
  for (State qa = 0; qa < a.num_states(); ++qa)
    for (State qb = 0; qb < nb; ++qb)
      for (int phase = 0; phase < 2; ++phase) {
        const State s = p.add_state("(" + a.state_name(qa) + "," + b.state_name(qb) + "," + std::to_string(phase) + ")");
        p.set_initial(s, phase == 0 && a.is_initial(qa) && b.is_initial(qb));
        p.set_accepting(s, phase == 1 && b.is_accepting(qb));
      }
  for (State qa = 0; qa < a.num_states(); ++qa)
    for (State qb = 0; qb < nb; ++qb)
      for (int phase = 0; phase < 2; ++phase) {
        int next_phase = phase;
        if (phase == 0 && a.is_accepting(qa)) next_phase = 1;
        else if (phase == 1 && b.is_accepting(qb)) next_phase = 0;
        for (const Transition& ta : a.out(qa))
          for (const Transition& tb : b.out(qb))
            if (ta.letter == tb.letter) p.add_transition(id(qa, qb, phase), ta.letter, id(ta.target, tb.target, next_phase));
      }
  return p;
}

bool delta_membership(const Automaton& w, const UPWord& x) {
  if (!w.is_deterministic()) throw InputError("delta-limit membership needs a deterministic automaton");
  check_word(w, x);
  const auto initial = w.initial_states();
  if (initial.empty()) return false;
  auto next = [&](State q, Letter a) -> std::optional<State> {
    for (const Transition& t : w.out(q))
      if (t.letter == a) return t.target;
    return std::nullopt;
  };
  std::optional<State> q = initial.front();
  for (Letter a : x.stem()) {
    q = next(*q, a);
    if (!q) return false;
  }
  // States at successive loop boundaries become periodic within
  // num_states() rounds.
  std::vector<std::size_t> round_of(w.num_states(), static_cast<std::size_t>(-1));
  std::vector<std::vector<State>> visited;  // states after each letter, per round
  std::size_t round = 0;
  while (round_of[*q] == static_cast<std::size_t>(-1)) {
    round_of[*q] = round;
    std::vector<State> states;
    for (Letter a : x.loop()) {
      q = next(*q, a);
      if (!q) return false;
      states.push_back(*q);
    }
    visited.push_back(std::move(states));
    ++round;
  }
  for (std::size_t r = round_of[*q]; r < visited.size(); ++r)
    for (State s : visited[r])
      if (w.is_accepting(s)) return true;
  return false;
}

}  // namespace realtrace
