#include "realtrace/trace.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "realtrace/errors.hpp"

namespace realtrace {

namespace {

// Labeled DAG given by successor lists. Only used transiently to reach a
// canonical word.
struct DependenceGraph {
  Word labels;
  std::vector<std::vector<std::size_t>> successors;
};

// Kahn's algorithm, always emitting the least-lettered minimal vertex.
// Minimal vertices of a dependence graph carry pairwise distinct letters,
// so the choice is unique and the result is the lexicographic normal form.
Word canonical_word(const DependenceGraph& g) {
  const std::size_t n = g.labels.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& succ : g.successors)
    for (std::size_t v : succ) ++indegree[v];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  Word out;
  out.reserve(n);
  while (!ready.empty()) {
    auto best = std::min_element(ready.begin(), ready.end(), [&](std::size_t x, std::size_t y) {
      return g.labels[x] != g.labels[y] ? g.labels[x] < g.labels[y] : x < y;
    });
    const std::size_t v = *best;
    ready.erase(best);
    out.push_back(g.labels[v]);
    for (std::size_t w : g.successors[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (out.size() != n) throw Error("dependence graph has a cycle");
  return out;
}

DependenceGraph graph_of_word(const DependenceAlphabet& da, const Word& w) {
  DependenceGraph g{w, std::vector<std::vector<std::size_t>>(w.size())};
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (da.depends(w[i], w[j])) g.successors[i].push_back(j);
  return g;
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) { return a == b || *a == *b; }

}  // namespace

void require_letters(const DependenceAlphabet& da, const Word& w) {
  for (Letter a : w)
    if (a >= da.size()) throw InputError("letter index " + std::to_string(a) + " not in alphabet");
}

void require_same_alphabet(const FiniteTrace& s, const FiniteTrace& t) {
  if (!same_alphabet(s.alphabet(), t.alphabet())) throw InputError("traces over different alphabets");
}

FiniteTrace make_trace_from_normal_form(AlphabetRef da, Word nf) { return FiniteTrace(std::move(da), std::move(nf)); }

FiniteTrace::FiniteTrace(AlphabetRef da, Word nf) : alphabet_(std::move(da)), normal_form_(std::move(nf)) {
  // Covering edges: the direct predecessors of j are the last earlier
  // occurrences of each letter dependent on w[j]; drop those that lie below
  // another direct predecessor.
  const std::size_t n = normal_form_.size();
  std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n));
  std::vector<std::size_t> last(alphabet_->size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const Letter a = normal_form_[j];
    std::vector<std::size_t> direct;
    for (Letter b : alphabet_->dependents(a).letters())
      if (last[b] != n) direct.push_back(last[b]);
    for (std::size_t i : direct) {
      below[j] |= below[i];
      below[j].set(i);
    }
    std::sort(direct.begin(), direct.end());
    for (std::size_t i : direct) {
      const bool covered =
          std::none_of(direct.begin(), direct.end(), [&](std::size_t k) { return k != i && below[k].test(i); });
      if (covered) edges_.push_back({i, j});
    }
    last[a] = j;
  }
}

FiniteTrace FiniteTrace::empty_trace(AlphabetRef da) { return FiniteTrace(std::move(da), {}); }

bool operator==(const FiniteTrace& s, const FiniteTrace& t) {
  return s.normal_form_ == t.normal_form_ && same_alphabet(s.alphabet_, t.alphabet_);
}

std::strong_ordering operator<=>(const FiniteTrace& s, const FiniteTrace& t) {
  if (auto c = s.size() <=> t.size(); c != 0) return c;
  return s.normal_form_ <=> t.normal_form_;
}

Word normal_form_of(const DependenceAlphabet& da, const Word& w) {
  require_letters(da, w);
  return canonical_word(graph_of_word(da, w));
}

FiniteTrace phi_word(const AlphabetRef& da, const Word& w) {
  return make_trace_from_normal_form(da, normal_form_of(*da, w));
}

FiniteTrace phi_word(const AlphabetRef& da, std::string_view w) { return phi_word(da, da->letters().parse_word(w)); }

FiniteTrace concat(const FiniteTrace& s, const FiniteTrace& t) {
  require_same_alphabet(s, t);
  const DependenceAlphabet& da = *s.alphabet();
  const std::size_t m = s.size();
  DependenceGraph g;
  g.labels = s.normal_form();
  g.labels.insert(g.labels.end(), t.normal_form().begin(), t.normal_form().end());
  g.successors.resize(g.labels.size());
  for (const auto& e : s.edges()) g.successors[e.from].push_back(e.to);
  for (const auto& e : t.edges()) g.successors[m + e.from].push_back(m + e.to);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (da.depends(s.label(i), t.label(j))) g.successors[i].push_back(m + j);
  return make_trace_from_normal_form(s.alphabet(), canonical_word(g));
}

bool equivalent(const AlphabetRef& da, const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    require_letters(*da, u);
    require_letters(*da, v);
    return false;
  }
  return phi_word(da, u) == phi_word(da, v);
}

Word lex_normal_form(const FiniteTrace& t) { return t.normal_form(); }

std::vector<Word> foata_normal_form(const FiniteTrace& t) {
  const Word& w = t.normal_form();
  const DependenceAlphabet& da = *t.alphabet();
  std::vector<std::size_t> step(w.size(), 0);
  std::vector<Word> steps;
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (da.depends(w[i], w[j])) step[j] = std::max(step[j], step[i] + 1);
    if (step[j] >= steps.size()) steps.resize(step[j] + 1);
    steps[step[j]].push_back(w[j]);
  }
  for (Word& s : steps) std::sort(s.begin(), s.end());
  return steps;
}

LetterSet alph(const FiniteTrace& t) { return letters_of(t.normal_form()); }

std::size_t length(const FiniteTrace& t) { return t.size(); }

std::optional<FiniteTrace> is_prefix(const FiniteTrace& s, const FiniteTrace& t) {
  require_same_alphabet(s, t);
  const DependenceAlphabet& da = *t.alphabet();
  // Left division: each letter of s must be a minimal vertex of what
  // remains of t. Minimal vertices have distinct letters, so the removed
  // vertex is forced.
  Word rest = t.normal_form();
  for (Letter a : s.normal_form()) {
    std::size_t p = 0;
    while (p < rest.size() && rest[p] != a && !da.depends(rest[p], a)) ++p;
    if (p == rest.size() || rest[p] != a) return std::nullopt;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return phi_word(t.alphabet(), rest);
}

}  // namespace realtrace
