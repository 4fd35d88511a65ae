#include "realtrace/text_format.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "realtrace/errors.hpp"

namespace realtrace {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::string> values;
};

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (split(raw).empty()) continue;
    const auto colon = raw.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, "expected 'key: values'");
    const auto key = split(raw.substr(0, colon));
    if (key.size() != 1) throw ParseError(number, "malformed key");
    lines.push_back({number, key[0], split(raw.substr(colon + 1))});
  }
  return lines;
}

// Runs f, reporting any InputError it raises against `line`.
template <typename F>
auto at_line(std::size_t line, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(line, e.what());
  }
}

void expect_count(const Line& l, std::size_t n) {
  if (l.values.size() != n)
    throw ParseError(l.number, "'" + l.key + "' expects " + std::to_string(n) + " value(s)");
}

bool parse_bool(const Line& l) {
  expect_count(l, 1);
  if (l.values[0] == "true") return true;
  if (l.values[0] == "false") return false;
  throw ParseError(l.number, "expected true or false");
}

std::size_t parse_size(const Line& l) {
  expect_count(l, 1);
  const std::string& v = l.values[0];
  if (v.empty() || v.size() > 9 || v.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(l.number, "expected a non-negative integer");
  return std::stoul(v);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

// Names of a `states:` line, indexed.
struct StateTable {
  std::vector<std::string> names;
  std::map<std::string, State> index;

  State lookup(const Line& l, const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(l.number, "unknown state '" + name + "'");
    return it->second;
  }
};

StateTable read_states(const Line& l) {
  if (l.values.empty()) throw ParseError(l.number, "'states' needs at least one state");
  StateTable t;
  for (const std::string& s : l.values) {
    if (!t.index.emplace(s, static_cast<State>(t.names.size())).second)
      throw ParseError(l.number, "duplicate state '" + s + "'");
    t.names.push_back(s);
  }
  return t;
}

const Line* single(const std::vector<Line>& lines, const std::string& key, bool required, std::size_t last_line) {
  const Line* found = nullptr;
  for (const Line& l : lines) {
    if (l.key != key) continue;
    if (found) throw ParseError(l.number, "duplicate '" + key + "' line");
    found = &l;
  }
  if (!found && required) throw ParseError(last_line, "missing '" + key + "' line");
  return found;
}

std::size_t last_line(std::string_view text) {
  std::size_t n = 1;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n;
}

void reject_unknown(const std::vector<Line>& lines, std::initializer_list<std::string_view> keys) {
  for (const Line& l : lines) {
    bool known = false;
    for (std::string_view k : keys) known = known || l.key == k;
    if (!known) throw ParseError(l.number, "unknown key '" + l.key + "'");
  }
}

const Alphabet kDefaultLabels({"0", "1"});

Alphabet optional_labels(const std::vector<Line>& lines, std::size_t end) {
  const Line* l = single(lines, "alphabet", false, end);
  if (!l) return kDefaultLabels;
  return at_line(l->number, [&] { return Alphabet(l->values); });
}

}  // namespace

AlphabetRef parse_alphabet(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t end = last_line(text);
  reject_unknown(lines, {"letters", "depend", "allow_isolated"});
  if (lines.empty() || lines.front().key != "letters") throw ParseError(lines.empty() ? end : lines.front().number, "the first line must be 'letters:'");
  const Line* letters = single(lines, "letters", true, end);
  const Alphabet alphabet = at_line(letters->number, [&] { return Alphabet(letters->values); });
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Line& l : lines) {
    if (l.key != "depend") continue;
    expect_count(l, 2);
    for (const std::string& s : l.values)
      if (!alphabet.find(s)) throw ParseError(l.number, "unknown letter '" + s + "'");
    pairs.emplace_back(l.values[0], l.values[1]);
  }
  const Line* iso = single(lines, "allow_isolated", false, end);
  const bool allow = iso ? parse_bool(*iso) : false;
  return at_line(iso ? iso->number : letters->number,
                 [&] { return validate_alphabet(alphabet.symbols(), pairs, allow); });
}

std::string print_alphabet(const DependenceAlphabet& da) {
  std::string out = "letters: " + join(da.letters().symbols()) + "\n";
  for (auto [a, b] : da.dependence_pairs())
    out += "depend: " + da.letters().symbol(a) + " " + da.letters().symbol(b) + "\n";
  if (da.allows_isolated()) out += "allow_isolated: true\n";
  return out;
}

Automaton parse_automaton(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t end = last_line(text);
  reject_unknown(lines, {"mode", "alphabet", "states", "initial", "accepting", "trans"});
  Acceptance mode = Acceptance::buchi;
  if (const Line* m = single(lines, "mode", false, end)) {
    expect_count(*m, 1);
    if (m->values[0] == "finite")
      mode = Acceptance::finite;
    else if (m->values[0] != "buchi")
      throw ParseError(m->number, "mode must be 'buchi' or 'finite'");
  }
  const Line* al = single(lines, "alphabet", true, end);
  Automaton a(at_line(al->number, [&] { return Alphabet(al->values); }), mode);
  const StateTable states = read_states(*single(lines, "states", true, end));
  for (const std::string& name : states.names) a.add_state(name);
  for (const Line& l : lines) {
    if (l.key == "initial" || l.key == "accepting") {
      for (const std::string& s : l.values) {
        const State q = states.lookup(l, s);
        if (l.key == "initial")
          a.set_initial(q);
        else
          a.set_accepting(q);
      }
    } else if (l.key == "trans") {
      expect_count(l, 3);
      const State from = states.lookup(l, l.values[0]);
      const State to = states.lookup(l, l.values[2]);
      const Letter letter = at_line(l.number, [&] { return a.alphabet().letter(l.values[1]); });
      a.add_transition(from, letter, to);
    }
  }
  return a;
}

std::string print_automaton(const Automaton& a) {
  std::string out = std::string("mode: ") + (a.mode() == Acceptance::finite ? "finite" : "buchi") + "\n";
  out += "alphabet: " + join(a.alphabet().symbols()) + "\n";
  std::vector<std::string> names;
  std::vector<std::string> initial;
  std::vector<std::string> accepting;
  for (State s = 0; s < a.num_states(); ++s) {
    names.push_back(a.state_name(s));
    if (a.is_initial(s)) initial.push_back(a.state_name(s));
    if (a.is_accepting(s)) accepting.push_back(a.state_name(s));
  }
  out += "states: " + join(names) + "\n";
  out += "initial:" + (initial.empty() ? "" : " " + join(initial)) + "\n";
  out += "accepting:" + (accepting.empty() ? "" : " " + join(accepting)) + "\n";
  for (State s = 0; s < a.num_states(); ++s)
    for (const Transition& t : a.out(s))
      out += "trans: " + a.state_name(s) + " " + a.alphabet().symbol(t.letter) + " " + a.state_name(t.target) + "\n";
  return out;
}

LabeledTree parse_finite_tree(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t end = last_line(text);
  Alphabet labels = optional_labels(lines, end);
  const Line* d = single(lines, "depth", true, end);
  const std::size_t depth = parse_size(*d);
  if (depth > sigma11::kMaxTreeDepth)
    throw ParseError(d->number, "depth above " + std::to_string(sigma11::kMaxTreeDepth));
  std::vector<Word> levels(depth + 1);
  std::vector<bool> seen(depth + 1, false);
  for (const Line& l : lines) {
    if (l.key == "alphabet" || l.key == "depth") continue;
    if (l.key.rfind("level", 0) != 0) throw ParseError(l.number, "unknown key '" + l.key + "'");
    const std::string digits = l.key.substr(5);
    if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(l.number, "malformed level key '" + l.key + "'");
    const std::size_t n = std::stoul(digits);
    if (n > depth) throw ParseError(l.number, "level beyond the declared depth");
    if (seen[n]) throw ParseError(l.number, "duplicate '" + l.key + "' line");
    seen[n] = true;
    expect_count(l, std::size_t{1} << n);
    for (const std::string& s : l.values) levels[n].push_back(at_line(l.number, [&] { return labels.letter(s); }));
  }
  for (std::size_t n = 0; n <= depth; ++n)
    if (!seen[n]) throw ParseError(end, "missing 'level" + std::to_string(n) + "' line");
  return {labels, sigma11::FiniteTree(std::move(levels))};
}

std::string print_finite_tree(const Alphabet& labels, const sigma11::FiniteTree& tree) {
  std::string out = "alphabet: " + join(labels.symbols()) + "\n";
  out += "depth: " + std::to_string(tree.depth()) + "\n";
  for (std::size_t n = 0; n <= tree.depth(); ++n) {
    std::vector<std::string> symbols;
    for (Letter a : tree.level(n)) symbols.push_back(labels.symbol(a));
    out += "level" + std::to_string(n) + ": " + join(symbols) + "\n";
  }
  return out;
}

sigma11::RegularTree parse_regular_tree(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t end = last_line(text);
  reject_unknown(lines, {"alphabet", "states", "initial", "trans", "output"});
  Alphabet labels = optional_labels(lines, end);
  const StateTable states = read_states(*single(lines, "states", true, end));
  const Line* init = single(lines, "initial", true, end);
  expect_count(*init, 1);
  const State initial = states.lookup(*init, init->values[0]);
  const std::size_t n = states.names.size();
  std::vector<std::array<std::optional<State>, 2>> next(n);
  std::vector<std::optional<Letter>> output(n);
  for (const Line& l : lines) {
    if (l.key == "trans") {
      expect_count(l, 3);
      const State from = states.lookup(l, l.values[0]);
      const Letter d = at_line(l.number, [&] { return sigma11::direction_alphabet().letter(l.values[1]); });
      if (next[from][d]) throw ParseError(l.number, "second transition on the same direction");
      next[from][d] = states.lookup(l, l.values[2]);
    } else if (l.key == "output") {
      expect_count(l, 2);
      const State s = states.lookup(l, l.values[0]);
      if (output[s]) throw ParseError(l.number, "second output for the same state");
      output[s] = at_line(l.number, [&] { return labels.letter(l.values[1]); });
    }
  }
  std::vector<std::array<State, 2>> table(n);
  std::vector<Letter> out(n);
  for (State s = 0; s < n; ++s) {
    if (!next[s][0] || !next[s][1]) throw ParseError(end, "state '" + states.names[s] + "' needs both l and r transitions");
    if (!output[s]) throw ParseError(end, "state '" + states.names[s] + "' has no output");
    table[s] = {*next[s][0], *next[s][1]};
    out[s] = *output[s];
  }
  return sigma11::RegularTree(labels, states.names, initial, std::move(table), std::move(out));
}

std::string print_regular_tree(const sigma11::RegularTree& t) {
  const Alphabet& dirs = sigma11::direction_alphabet();
  std::string out = "alphabet: " + join(t.labels().symbols()) + "\n";
  std::vector<std::string> names;
  for (State s = 0; s < t.num_states(); ++s) names.push_back(t.state_name(s));
  out += "states: " + join(names) + "\n";
  out += "initial: " + t.state_name(t.initial()) + "\n";
  for (State s = 0; s < t.num_states(); ++s)
    for (Letter d = 0; d < 2; ++d)
      out += "trans: " + t.state_name(s) + " " + dirs.symbol(d) + " " + t.state_name(t.next(s, d)) + "\n";
  for (State s = 0; s < t.num_states(); ++s)
    out += "output: " + t.state_name(s) + " " + t.labels().symbol(t.output(s)) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace realtrace
