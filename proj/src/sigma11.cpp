#include "realtrace/sigma11.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "realtrace/buchi.hpp"
#include "realtrace/errors.hpp"
#include "realtrace/metric.hpp"

namespace realtrace::sigma11 {

namespace {

std::size_t level_size(std::size_t n) { return std::size_t{1} << n; }

// Block position of the node with lexicographic index j on level n.
std::size_t block_position(std::size_t n, std::size_t j) { return n % 2 == 0 ? level_size(n) - 1 - j : j; }

// Level n's labels in block order, primed on even levels.
Word level_block(const TreeAlphabetSetup& setup, const FiniteTree& t, std::size_t n) {
  Word block(level_size(n));
  for (std::size_t j = 0; j < level_size(n); ++j) {
    const Letter a = t.label(n, j);
    block[block_position(n, j)] = n % 2 == 0 ? setup.primed(a) : setup.base(a);
  }
  return block;
}

void require_sigma_labels(const TreeAlphabetSetup& setup, const FiniteTree& t) {
  for (std::size_t n = 0; n <= t.depth(); ++n)
    for (Letter a : t.level(n))
      if (a >= setup.sigma.size()) throw InputError("tree label outside Sigma");
}

void append(Word& w, const Word& more) { w.insert(w.end(), more.begin(), more.end()); }

Word interleave(const Word& u, const Word& v) {
  if (v.size() != 2 * u.size() && v.size() != 2 * u.size() + 1)
    throw std::logic_error("block lengths violate |v| in {2|u|, 2|u|+1}");
  Word w;
  for (std::size_t j = 0; j < u.size(); ++j) {
    w.push_back(u[j]);
    w.push_back(v[2 * j]);
    w.push_back(v[2 * j + 1]);
  }
  if (v.size() % 2 == 1) w.push_back(v.back());
  return w;
}

}  // namespace

TreeAlphabetSetup build_setup(const std::vector<std::string>& sigma) {
  if (sigma.size() < 2) throw InputError("Sigma needs at least two letters");
  std::vector<std::string> gamma = sigma;
  for (const std::string& a : sigma) gamma.push_back(a + "'");
  gamma.emplace_back("A");
  gamma.emplace_back("B");
  TreeAlphabetSetup setup{Alphabet(sigma), nullptr};
  const Alphabet letters(gamma);  // rejects any name collision
  const std::size_t s = sigma.size();
  std::vector<std::pair<std::string, std::string>> depend;
  auto add = [&](std::size_t a, std::size_t b) { depend.emplace_back(gamma[a], gamma[b]); };
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b) {
      add(a, b);          // Sigma clique
      add(s + a, s + b);  // Sigma' clique
    }
  const std::size_t sep_a = 2 * s;
  const std::size_t sep_b = 2 * s + 1;
  add(sep_a, sep_b);
  for (std::size_t a = 0; a < s; ++a) {
    add(sep_a, s + a);  // A with Sigma'
    add(sep_b, a);      // B with Sigma
  }
  setup.gamma = validate_alphabet(gamma, depend, false);
  return setup;
}

FiniteTree::FiniteTree(std::vector<Word> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw InputError("a tree needs at least the root level");
  if (depth() > kMaxTreeDepth) throw InputError("tree depth above " + std::to_string(kMaxTreeDepth));
  for (std::size_t n = 0; n < levels_.size(); ++n)
    if (levels_[n].size() != level_size(n))
      throw InputError("level " + std::to_string(n) + " needs " + std::to_string(level_size(n)) + " labels");
}

Letter FiniteTree::label(const Word& path) const {
  std::size_t j = 0;
  for (Letter d : path) j = 2 * j + d;
  return label(path.size(), j);
}

FiniteTree FiniteTree::truncated(std::size_t d) const {
  if (d > depth()) throw PreconditionError("cannot truncate below the tree's depth");
  return FiniteTree(std::vector<Word>(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(d + 1)));
}

const Alphabet& direction_alphabet() {
  static const Alphabet directions({"l", "r"});
  return directions;
}

RegularTree::RegularTree(Alphabet labels, std::vector<std::string> state_names, State initial,
                         std::vector<std::array<State, 2>> next, std::vector<Letter> output)
    : labels_(std::move(labels)),
      names_(std::move(state_names)),
      initial_(initial),
      next_(std::move(next)),
      output_(std::move(output)) {
  const std::size_t n = next_.size();
  if (n == 0) throw InputError("regular tree needs at least one state");
  if (names_.size() != n || output_.size() != n) throw InputError("regular tree: inconsistent state tables");
  if (initial_ >= n) throw InputError("regular tree: unknown initial state");
  for (const auto& succ : next_)
    for (State s : succ)
      if (s >= n) throw InputError("regular tree: transition to unknown state");
  for (Letter a : output_)
    if (a >= labels_.size()) throw InputError("regular tree: output outside the label alphabet");
}

Letter RegularTree::label(const Word& path) const {
  State s = initial_;
  for (Letter d : path) s = next(s, d);
  return output(s);
}

FiniteTree RegularTree::truncate(std::size_t depth) const {
  std::vector<Word> levels;
  std::vector<State> frontier{initial_};
  for (std::size_t n = 0; n <= depth; ++n) {
    Word level;
    std::vector<State> children;
    for (State s : frontier) {
      level.push_back(output(s));
      children.push_back(next(s, 0));
      children.push_back(next(s, 1));
    }
    levels.push_back(std::move(level));
    frontier = std::move(children);
  }
  return FiniteTree(std::move(levels));
}

Word g_code(const TreeAlphabetSetup& setup, const FiniteTree& t) {
  Word w = g_code_through_level(setup, t, t.depth());
  w.push_back(setup.separator_after(t.depth()));
  return w;
}

Word g_code_through_level(const TreeAlphabetSetup& setup, const FiniteTree& t, std::size_t level) {
  require_sigma_labels(setup, t);
  if (level > t.depth()) throw PreconditionError("level beyond the tree's depth");
  Word w;
  for (std::size_t n = 0; n <= level; ++n) {
    if (n > 0) w.push_back(setup.separator_after(n - 1));
    append(w, level_block(setup, t, n));
  }
  return w;
}

FiniteTrace h_trunc(const TreeAlphabetSetup& setup, const FiniteTree& t) { return phi_word(setup.gamma, g_code(setup, t)); }

Automaton build_L_automaton(const TreeAlphabetSetup& setup, const Automaton& r_in) {
  const Automaton r = r_in.relabeled(setup.sigma);
  enum Phase { x_odd, wo0, wo1, wo2, wo_end, x_even, we0, we1, we2, we_end, kPhases };
  static const char* const names[kPhases] = {"xo", "wo0", "wo1", "wo2", "woe", "xe", "we0", "we1", "we2", "wee"};
  Automaton l(setup.gamma->letters(), Acceptance::buchi);
  const std::size_t nr = r.num_states();
  auto id = [&](int phase, State q) { return static_cast<State>(phase * nr + q); };
  for (int phase = 0; phase < kPhases; ++phase)
    for (State q = 0; q < nr; ++q) {
      const State s = l.add_state(std::string(names[phase]) + "." + r.state_name(q));
      l.set_initial(s, phase == x_odd && r.is_initial(q));
      l.set_accepting(s, (phase == x_odd || phase == x_even) && r.is_accepting(q));
    }
  const auto sigma = setup.sigma.all().letters();
  for (State q = 0; q < nr; ++q) {
    for (const Transition& t : r.out(q)) {
      l.add_transition(id(x_odd, q), setup.primed(t.letter), id(wo0, t.target));
      l.add_transition(id(x_even, q), setup.base(t.letter), id(we0, t.target));
    }
    for (Letter a : sigma) {
      const Letter base = setup.base(a);
      const Letter primed = setup.primed(a);
      l.add_transition(id(wo0, q), primed, id(wo1, q));
      l.add_transition(id(wo1, q), base, id(wo2, q));
      l.add_transition(id(wo2, q), base, id(wo0, q));
      l.add_transition(id(wo0, q), base, id(wo_end, q));
      l.add_transition(id(we0, q), base, id(we1, q));
      l.add_transition(id(we1, q), primed, id(we2, q));
      l.add_transition(id(we2, q), primed, id(we0, q));
      l.add_transition(id(we0, q), primed, id(we_end, q));
    }
    l.add_transition(id(wo0, q), setup.sep_a(), id(x_even, q));
    l.add_transition(id(wo_end, q), setup.sep_a(), id(x_even, q));
    l.add_transition(id(we0, q), setup.sep_b(), id(x_odd, q));
    l.add_transition(id(we_end, q), setup.sep_b(), id(x_odd, q));
  }
  return restrict_states(l, reachable_states(l));
}

std::optional<UPWord> project_shape_word(const TreeAlphabetSetup& setup, const UPWord& w) {
  // x-letters are the first letter and every letter right after a separator.
  const std::size_t s = w.stem().size();
  const std::size_t p = w.loop().size();
  auto is_x = [&](std::size_t i) { return i == 0 || setup.is_separator(w.at(i - 1)); };
  Word stem;
  Word loop;
  for (std::size_t i = 0; i < s + p; ++i)
    if (is_x(i)) stem.push_back(setup.unprime(w.at(i)));
  for (std::size_t i = s + p; i < s + 2 * p; ++i)
    if (is_x(i)) loop.push_back(setup.unprime(w.at(i)));
  if (loop.empty()) return std::nullopt;
  return UPWord(std::move(stem), std::move(loop));
}

UPWord branch_labels(const RegularTree& t, const UPWord& branch) {
  Word labels;
  State p = t.initial();
  for (Letter d : branch.stem()) {
    labels.push_back(t.output(p));
    p = t.next(p, d);
  }
  std::map<State, std::size_t> seen;
  while (!seen.contains(p)) {
    seen[p] = labels.size();
    for (Letter d : branch.loop()) {
      labels.push_back(t.output(p));
      p = t.next(p, d);
    }
  }
  const auto start = static_cast<std::ptrdiff_t>(seen.at(p));
  return UPWord(Word(labels.begin(), labels.begin() + start), Word(labels.begin() + start, labels.end()));
}

std::optional<UPWord> path_exists(const RegularTree& t, const Automaton& r_in) {
  const Automaton r = r_in.relabeled(t.labels());
  const std::size_t nr = r.num_states();
  auto node = [&](State p, State q) { return static_cast<std::size_t>(p) * nr + q; };
  // Node (p, q): at a tree node in state p, before R reads its label.
  LassoGraph g(t.num_states() * nr);
  std::vector<bool> accepting(g.size(), false);
  for (State p = 0; p < t.num_states(); ++p)
    for (State q = 0; q < nr; ++q) {
      accepting[node(p, q)] = r.is_accepting(q);
      for (const Transition& tr : r.out(q)) {
        if (tr.letter != t.output(p)) continue;
        for (Letter d = 0; d < 2; ++d) g[node(p, q)].push_back({d, node(t.next(p, d), tr.target)});
      }
    }
  std::vector<std::size_t> initial;
  for (State q : r.initial_states()) initial.push_back(node(t.initial(), q));
  auto lasso = find_lasso(g, initial, accepting);
  if (!lasso) return std::nullopt;
  UPWord branch(std::move(lasso->stem), std::move(lasso->cycle));
  if (!buchi_accepts(r, branch_labels(t, branch))) throw std::logic_error("path_exists: branch replay rejected");
  return branch;
}

SigmaWitness witness_sigma(const TreeAlphabetSetup& setup, const FiniteTree& t, const Word& branch, std::size_t k) {
  require_sigma_labels(setup, t);
  if (branch.size() < k) throw PreconditionError("branch shorter than k");
  if (t.depth() < k) throw PreconditionError("tree shallower than k");
  for (std::size_t i = 0; i < k; ++i)
    if (branch[i] > 1) throw InputError("branch directions must be l or r");
  SigmaWitness w;
  std::size_t lex_index = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    if (i > 0) {
      const bool right = branch[i - 1] == 1;
      // On even levels the next block runs in lexicographic order, so the
      // left child comes first; on odd levels the next block is reversed.
      const std::size_t c = (i - 1) % 2 == 0 ? (right ? 1 : 0) : (right ? 0 : 1);
      pos = 2 * w.u.back().size() + c;
      lex_index = 2 * lex_index + (right ? 1 : 0);
      if (block_position(i, lex_index) != pos) throw std::logic_error("witness position does not match the branch node");
    }
    const Word block = level_block(setup, t, i);
    const auto at = static_cast<std::ptrdiff_t>(pos);
    w.v.emplace_back(block.begin(), block.begin() + at);
    w.x.push_back(block[pos]);
    w.u.emplace_back(block.begin() + at + 1, block.end());
    if (i > 0) {
      w.word.push_back(setup.separator_after(i - 1));
      append(w.word, w.v.back());
    }
    w.word.push_back(w.x.back());
    append(w.word, w.u.back());
  }
  return w;
}

Word shape_prefix(const TreeAlphabetSetup& setup, const SigmaWitness& w) {
  Word out;
  for (std::size_t i = 0; i < w.x.size(); ++i) {
    if (i > 0) {
      append(out, interleave(w.u[i - 1], w.v[i]));
      out.push_back(setup.separator_after(i - 1));
    }
    out.push_back(w.x[i]);
  }
  return out;
}

LemmaCheck check_lemma_finite(const TreeAlphabetSetup& setup, const Automaton& r, const Automaton& l,
                              const FiniteTree& t, const Word& branch, std::size_t k) {
  LemmaCheck check;
  check.witness_matches_code = true;
  for (std::size_t j = 0; j <= k; ++j) {
    const SigmaWitness wj = witness_sigma(setup, t, branch, j);
    if (!equivalent(setup.gamma, wj.word, g_code_through_level(setup, t, j))) check.witness_matches_code = false;
  }
  const SigmaWitness w = witness_sigma(setup, t, branch, k);
  Word shape = shape_prefix(setup, w);
  Word shape_tail = shape;
  append(shape_tail, w.u.back());
  check.shape_matches_witness = equivalent(setup.gamma, shape_tail, w.word);

  Word labels;
  for (Letter x : w.x) labels.push_back(setup.unprime(x));
  check.labels_live = is_live_prefix(r.relabeled(setup.sigma), labels);
  check.shape_live = is_live_prefix(l, shape);
  return check;
}

LemmaCheck check_lemma_finite(const TreeAlphabetSetup& setup, const Automaton& r, const FiniteTree& t,
                              const Word& branch, std::size_t k) {
  return check_lemma_finite(setup, r, build_L_automaton(setup, r), t, branch, k);
}

std::size_t modulus_bound(std::size_t k) {
  if (k < 2) throw PreconditionError("the modulus bound needs k >= 2");
  return (k - 1) + level_size(k - 1) - 1;
}

bool tree_code_modulus(const TreeAlphabetSetup& setup, const FiniteTree& t, const FiniteTree& s, std::size_t k) {
  const std::size_t cap = modulus_bound(k);
  if (t.depth() < k + 1 || s.depth() < k + 1) throw PreconditionError("trees must have depth at least k+1");
  for (std::size_t n = 0; n < k; ++n)
    if (t.level(n) != s.level(n)) throw PreconditionError("trees must agree on levels below k");
  const FiniteTrace ht = h_trunc(setup, t.truncated(k + 1));
  const FiniteTrace hs = h_trunc(setup, s.truncated(k + 1));
  return l_pref(ht, hs, cap).saturated();
}

}  // namespace realtrace::sigma11
