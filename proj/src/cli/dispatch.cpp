#include "realtrace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>

#include "realtrace/buchi.hpp"
#include "realtrace/decompose.hpp"
#include "realtrace/errors.hpp"
#include "realtrace/metric.hpp"
#include "realtrace/nfa.hpp"
#include "realtrace/rational.hpp"
#include "realtrace/sigma11.hpp"
#include "realtrace/testing/battery.hpp"
#include "realtrace/text_format.hpp"
#include "realtrace/trace.hpp"

namespace realtrace {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

const char* boolean(bool b) { return b ? "true" : "false"; }

AlphabetRef load_alphabet(const std::string& path) { return parse_alphabet(read_file(path)); }
Automaton load_automaton(const std::string& path) { return parse_automaton(read_file(path)); }

// Every pair dependent: phi is the identity on words.
AlphabetRef full_dependence(const Alphabet& letters) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& a : letters.symbols())
    for (const std::string& b : letters.symbols()) pairs.emplace_back(a, b);
  return validate_alphabet(letters.symbols(), pairs, true);
}

void print_components(std::ostream& out, const Automaton& source, const Alphabet& letters,
                      const std::vector<DecompositionComponent>& parts, std::size_t max_len) {
  out << "components: " << parts.size() << "\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const DecompositionComponent& c = parts[i];
    out << "component " << i << ": cut=" << source.state_name(c.cut_state) << " U-letters=" << letters.format(c.prefix_letters)
        << " V-letters=" << letters.format(c.period_letters) << "\n";
    for (const auto& [tag, aut] : {std::pair<const char*, const Automaton*>{"U", &c.prefix}, {"V", &c.period}}) {
      out << "  " << tag << " words <= " << max_len << ":";
      std::size_t shown = 0;
      for (std::size_t n = 0; n <= max_len; ++n)
        for (const Word& w : accepted_words_of_length(*aut, n)) {
          out << " " << letters.format(w);
          ++shown;
        }
      if (shown == 0) out << " (none)";
      out << "\n";
    }
  }
}

struct Options {
  std::size_t cap = 8;
  std::size_t depth = 0;
  bool depth_set = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_len = 3;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Traces over dependence alphabets, omega-automata and tree codes", "realtrace"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--cap", opt.cap, "cap for prefix agreement")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized suites");
  app.add_option("--max-len", opt.max_len, "length bound for listed words");
  auto* depth_opt = app.add_option("--depth", opt.depth, "tree depth");

  std::function<int()> action;
  std::vector<std::string> pos;

  // trace
  auto* trace = app.add_subcommand("trace", "finite traces")->require_subcommand(1);
  auto trace_cmd = [&](const char* name, const char* help, std::size_t words, std::function<int(const AlphabetRef&)> run) {
    auto* sub = trace->add_subcommand(name, help);
    sub->add_option("args", pos, "alphabet file and words")->required()->expected(static_cast<int>(words + 1));
    sub->callback([&, run] {
      action = [&, run] { return run(load_alphabet(pos[0])); };
    });
  };
  auto word_arg = [&](const AlphabetRef& da, std::size_t i) { return da->letters().parse_word(pos[i]); };
  trace_cmd("nf", "lexicographic normal form", 1, [&](const AlphabetRef& da) {
    out << phi_word(da, word_arg(da, 1)).to_string() << "\n";
    return kOk;
  });
  trace_cmd("equiv", "are two words equivalent", 2, [&](const AlphabetRef& da) {
    out << boolean(equivalent(da, word_arg(da, 1), word_arg(da, 2))) << "\n";
    return kOk;
  });
  trace_cmd("concat", "normal form of a concatenation", 2, [&](const AlphabetRef& da) {
    out << concat(phi_word(da, word_arg(da, 1)), phi_word(da, word_arg(da, 2))).to_string() << "\n";
    return kOk;
  });
  trace_cmd("prefix", "suffix z with s.z = t, if s is a prefix of t", 2, [&](const AlphabetRef& da) {
    const auto z = is_prefix(phi_word(da, word_arg(da, 1)), phi_word(da, word_arg(da, 2)));
    out << (z ? "suffix " + z->to_string() : std::string("none")) << "\n";
    return kOk;
  });
  trace_cmd("foata", "Foata normal form", 1, [&](const AlphabetRef& da) {
    const auto steps = foata_normal_form(phi_word(da, word_arg(da, 1)));
    if (steps.empty()) out << "ε";
    for (std::size_t i = 0; i < steps.size(); ++i) out << (i ? " " : "") << da->letters().format(letters_of(steps[i]));
    out << "\n";
    return kOk;
  });

  // metric
  auto* metric = app.add_subcommand("metric", "prefix agreement and distance of two traces");
  metric->add_option("args", pos, "alphabet file and two words")->required()->expected(3);
  metric->callback([&] {
    action = [&] {
      const AlphabetRef da = load_alphabet(pos[0]);
      const auto l = l_pref(phi_word(da, word_arg(da, 1)), phi_word(da, word_arg(da, 2)), opt.cap);
      out << "l_pref=" << l.to_string() << " d_pref=" << distance_of(l).to_string() << "\n";
      return kOk;
    };
  });

  // omega
  auto* omega = app.add_subcommand("omega", "Büchi automata and ultimately periodic words")->require_subcommand(1);
  auto omega_cmd = [&](const char* name, const char* help, std::size_t extra, std::function<int(const Automaton&)> run) {
    auto* sub = omega->add_subcommand(name, help);
    sub->add_option("args", pos, "automaton file and arguments")->required()->expected(static_cast<int>(extra + 1));
    sub->callback([&, run] {
      action = [&, run] { return run(load_automaton(pos[0])); };
    });
  };
  omega_cmd("accepts", "Büchi acceptance of u(v)", 1, [&](const Automaton& a) {
    out << boolean(buchi_accepts(a, parse_upword(a.alphabet(), pos[1]))) << "\n";
    return kOk;
  });
  omega_cmd("empty", "emptiness, with a witness when nonempty", 0, [&](const Automaton& a) {
    const auto w = buchi_nonempty(a);
    out << (w ? "nonempty witness=" + format_upword(a.alphabet(), *w) : std::string("empty")) << "\n";
    return kOk;
  });
  omega_cmd("delta", "infinitely many prefixes accepted (deterministic automaton)", 1, [&](const Automaton& a) {
    out << boolean(delta_membership(a, parse_upword(a.alphabet(), pos[1]))) << "\n";
    return kOk;
  });
  omega_cmd("decompose", "monoalphabetic U.V^omega components", 0, [&](const Automaton& a) {
    print_components(out, a, a.alphabet(), decompose_monoalphabetic(a), opt.max_len);
    return kOk;
  });

  // rational
  auto* rational = app.add_subcommand("rational", "rational trace languages")->require_subcommand(1);
  std::string alphabet_path;
  auto source_alphabet = [&](const Automaton& a) {
    return alphabet_path.empty() ? full_dependence(a.alphabet()) : load_alphabet(alphabet_path);
  };
  auto* from = rational->add_subcommand("from-buchi", "components of phi(L(A))");
  from->add_option("args", pos, "alphabet file and automaton file")->required()->expected(2);
  from->callback([&] {
    action = [&] {
      const AlphabetRef da = load_alphabet(pos[0]);
      const Automaton a = load_automaton(pos[1]);
      const RationalTraceLanguage lang = from_buchi(da, a);
      print_components(out, a, da->letters(), lang.components, opt.max_len);
      return kOk;
    };
  });
  std::size_t psi_index = 0;
  std::string psi_path;
  auto* psi = rational->add_subcommand("psi", "i-th trace of phi(L(S)) in length-lex order");
  psi->add_option("automaton", psi_path, "finite-word automaton file")->required();
  psi->add_option("index", psi_index, "index")->required();
  psi->add_option("--alphabet", alphabet_path, "dependence alphabet file (default: all letters dependent)");
  psi->callback([&] {
    action = [&] {
      const Automaton s = load_automaton(psi_path);
      const TraceEnumeration e(source_alphabet(s), s);
      out << e.at(psi_index).to_string() << "\n";
      return kOk;
    };
  });
  std::vector<std::size_t> hn;
  std::vector<std::size_t> hm;
  std::size_t hk = 0;
  auto* hcheck = rational->add_subcommand("hcheck", "prefixes of size <= k of H(N) and H(M) coincide");
  hcheck->add_option("automaton", pos, "finite-word automaton file for S")->required()->expected(1);
  hcheck->add_option("--n", hn, "index sequence N")->required()->delimiter(',');
  hcheck->add_option("--m", hm, "index sequence M")->required()->delimiter(',');
  hcheck->add_option("--k", hk, "agreement length")->required();
  hcheck->add_option("--alphabet", alphabet_path, "dependence alphabet file (default: all letters dependent)");
  hcheck->callback([&] {
    action = [&] {
      const Automaton s = load_automaton(pos[0]);
      const TraceEnumeration e(source_alphabet(s), s);
      const bool ok = h_continuity_check(e, hn, hm, hk);
      out << boolean(ok) << "\n";
      return ok ? kOk : kCheckFailed;
    };
  });

  // sigma11
  auto* sig = app.add_subcommand("sigma11", "tree codes and the shape automaton")->require_subcommand(1);
  auto* code = sig->add_subcommand("code-tree", "code word of a finite tree");
  code->add_option("tree", pos, "finite tree file")->required()->expected(1);
  code->callback([&] {
    action = [&] {
      const LabeledTree lt = parse_finite_tree(read_file(pos[0]));
      const auto setup = sigma11::build_setup(lt.labels.symbols());
      const auto tree = opt.depth_set ? lt.tree.truncated(opt.depth) : lt.tree;
      out << setup.gamma->letters().format(sigma11::g_code(setup, tree)) << "\n";
      return kOk;
    };
  });
  auto* build_l = sig->add_subcommand("build-l", "shape automaton for a Büchi automaton R over the labels");
  build_l->add_option("automaton", pos, "Büchi automaton file for R")->required()->expected(1);
  build_l->callback([&] {
    action = [&] {
      const Automaton r = load_automaton(pos[0]);
      const auto setup = sigma11::build_setup(r.alphabet().symbols());
      out << print_automaton(sigma11::build_L_automaton(setup, r));
      return kOk;
    };
  });
  auto* path = sig->add_subcommand("path", "a branch of a regular tree whose labels R accepts");
  path->add_option("args", pos, "regular tree file and Büchi automaton file")->required()->expected(2);
  path->callback([&] {
    action = [&] {
      const auto tree = parse_regular_tree(read_file(pos[0]));
      const Automaton r = load_automaton(pos[1]);
      const auto branch = sigma11::path_exists(tree, r);
      if (!branch) {
        out << "none\n";
        return kOk;
      }
      out << "branch=" << format_upword(sigma11::direction_alphabet(), *branch)
          << " labels=" << format_upword(tree.labels(), sigma11::branch_labels(tree, *branch)) << "\n";
      return kOk;
    };
  });
  auto* lemma = sig->add_subcommand("check-lemma", "finite check of a branch against the code and R");
  lemma->add_option("args", pos, "finite tree file, Büchi automaton file, branch over l r")->required()->expected(3);
  lemma->callback([&] {
    action = [&] {
      const LabeledTree lt = parse_finite_tree(read_file(pos[0]));
      const Automaton r = load_automaton(pos[1]);
      const Word branch = sigma11::direction_alphabet().parse_word(pos[2]);
      const auto setup = sigma11::build_setup(lt.labels.symbols());
      const std::size_t k = opt.depth_set ? opt.depth : branch.size();
      const auto c = sigma11::check_lemma_finite(setup, r, lt.tree, branch, k);
      out << "witness_matches_code=" << boolean(c.witness_matches_code) << "\n"
          << "shape_matches_witness=" << boolean(c.shape_matches_witness) << "\n"
          << "labels_live=" << boolean(c.labels_live) << "\n"
          << "shape_live=" << boolean(c.shape_live) << "\n"
          << "result=" << boolean(c.ok()) << "\n";
      return c.ok() ? kOk : kCheckFailed;
    };
  });
  std::size_t mod_k = 2;
  auto* modulus = sig->add_subcommand("modulus", "code agreement bound for trees agreeing below level k");
  modulus->add_option("args", pos, "two finite tree files")->required()->expected(2);
  modulus->add_option("--k", mod_k, "agreement level")->required();
  modulus->callback([&] {
    action = [&] {
      const LabeledTree t = parse_finite_tree(read_file(pos[0]));
      const LabeledTree s = parse_finite_tree(read_file(pos[1]));
      if (!(t.labels == s.labels)) throw InputError("the trees use different label alphabets");
      const auto setup = sigma11::build_setup(t.labels.symbols());
      const bool ok = sigma11::tree_code_modulus(setup, t.tree, s.tree, mod_k);
      out << "bound=" << sigma11::modulus_bound(mod_k) << " " << boolean(ok) << "\n";
      return ok ? kOk : kCheckFailed;
    };
  });

  // battery
  auto* battery = app.add_subcommand("battery", "run every acceptance suite");
  battery->callback([&] {
    action = [&] {
      const auto start = std::chrono::steady_clock::now();
      const RunReport report = battery_report(opt.seed);
      out << report.render();
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
      err << "wall time: " << wall.count() << " s\n";
      return report.ok() ? kOk : kCheckFailed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  opt.depth_set = depth_opt->count() > 0;
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace realtrace
