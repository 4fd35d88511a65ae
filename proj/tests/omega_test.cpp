#include <doctest.h>

#include <algorithm>

#include "realtrace/buchi.hpp"
#include "realtrace/decompose.hpp"
#include "realtrace/errors.hpp"
#include "realtrace/nfa.hpp"
#include "realtrace/testing/fixtures.hpp"
#include "realtrace/testing/generators.hpp"
#include "realtrace/testing/oracles.hpp"

using namespace realtrace;

namespace {

UPWord up(std::string_view text) { return parse_upword(fixture::binary(), text); }

Automaton words_automaton(const std::vector<Word>& words) { return from_words(fixture::binary(), words); }

}  // namespace

TEST_CASE("UPWord canonical form") {
  CHECK(UPWord({}, {0, 1}) == UPWord({0}, {1, 0}));
  CHECK(UPWord({}, {0, 1, 0, 1}) == UPWord({}, {0, 1}));
  CHECK(UPWord({1, 1}, {1}) == UPWord({}, {1}));
  CHECK(UPWord({0, 1}, {0, 1}).stem().empty());
  CHECK_FALSE(UPWord({0}, {1}) == UPWord({}, {1}));
  CHECK_THROWS_AS(UPWord({0}, {}), InputError);
  CHECK(format_upword(fixture::binary(), up("0(10)")) == "(01)");
  CHECK(format_upword(fixture::binary(), up("1(0)")) == "1(0)");
  CHECK_THROWS_AS(up("01"), InputError);
  CHECK_THROWS_AS(up("0()"), InputError);
}

TEST_CASE("UPWord equality matches letter-by-letter comparison") {
  gen::Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const Word u1 = gen::word_up_to(rng, 2, 3);
    const Word v1 = gen::word(rng, 2, rng.between(1, 4));
    const Word u2 = gen::word_up_to(rng, 2, 3);
    const Word v2 = gen::word(rng, 2, rng.between(1, 4));
    CHECK((UPWord(u1, v1) == UPWord(u2, v2)) == oracle::same_infinite_word(u1, v1, u2, v2));
    const UPWord x(u1, v1);
    CHECK(oracle::same_infinite_word(x.stem(), x.loop(), u1, v1));
  }
}

TEST_CASE("buchi_accepts for infinitely many 1s") {
  const Automaton a = fixture::zero_star_one();
  CHECK(buchi_accepts(a, up("(01)")));
  CHECK_FALSE(buchi_accepts(a, up("1(0)")));
  CHECK(buchi_accepts(a, up("(011)")));
  CHECK(buchi_accepts(a, up("000(1)")));
  CHECK_THROWS_AS(buchi_accepts(a, UPWord({}, {2})), InputError);
}

TEST_CASE("buchi_accepts agrees with counting 1s in the loop") {
  const Automaton a = fixture::zero_star_one();
  gen::Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const UPWord x = gen::up_word(rng, 2, 5, 5);
    CHECK(buchi_accepts(a, x) == (std::count(x.loop().begin(), x.loop().end(), 1) > 0));
  }
}

TEST_CASE("buchi_nonempty") {
  const auto w = buchi_nonempty(fixture::zero_star_one());
  REQUIRE(w);
  CHECK(buchi_accepts(fixture::zero_star_one(), *w));

  Automaton none = fixture::zero_star_one();
  none.set_accepting(1, false);
  CHECK_FALSE(buchi_nonempty(none));

  Automaton unreachable(fixture::binary());
  const State s0 = unreachable.add_state();
  const State s1 = unreachable.add_state();
  unreachable.set_initial(s0);
  unreachable.set_accepting(s1);
  unreachable.add_transition(s0, 0, s0);
  unreachable.add_transition(s1, 1, s1);
  CHECK_FALSE(buchi_nonempty(unreachable));

  // Accepting but not on a cycle.
  Automaton transient(fixture::binary());
  transient.add_state();
  transient.add_state();
  transient.set_initial(0);
  transient.set_accepting(0);
  transient.add_transition(0, 1, 1);
  transient.add_transition(1, 0, 1);
  CHECK_FALSE(buchi_nonempty(transient));
}

TEST_CASE("buchi_nonempty witnesses are accepted, and absent only for empty languages") {
  gen::Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const Automaton a = gen::buchi(rng, fixture::binary(), 3);
    const auto w = buchi_nonempty(a);
    if (w) {
      CHECK(buchi_accepts(a, *w));
    } else {
      for (const Word& stem : oracle::all_words(2, 3))
        for (const Word& loop : oracle::all_words(2, 3))
          if (!loop.empty()) CHECK_FALSE(buchi_accepts(a, UPWord(stem, loop)));
    }
  }
}

TEST_CASE("delta_membership for (0*1)+") {
  const Automaton w = fixture::zero_star_one_plus();
  CHECK(delta_membership(w, up("(01)")));
  CHECK_FALSE(delta_membership(w, up("(0)")));
  CHECK_FALSE(delta_membership(w, up("1(0)")));
  CHECK(delta_membership(w, up("0(1)")));
  CHECK_THROWS_AS(delta_membership(w, UPWord({}, {2})), InputError);

  Automaton nondet = w;
  nondet.add_transition(0, 0, 1);
  CHECK_THROWS_AS(delta_membership(nondet, up("(01)")), InputError);
}

TEST_CASE("delta_membership agrees with scanning the periodic window") {
  gen::Rng rng(47);
  int accepted = 0;
  for (int i = 0; i < 200; ++i) {
    const Automaton w = determinize(gen::buchi(rng, fixture::binary(), 3));
    for (int j = 0; j < 10; ++j) {
      const UPWord x = gen::up_word(rng, 2, 4, 4);
      const bool got = delta_membership(w, x);
      accepted += got ? 1 : 0;
      CHECK(got == oracle::delta_scan(w, x));
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("finite-word helpers") {
  const Automaton s = words_automaton({{0, 1}, {1}, {}});
  CHECK(nfa_accepts(s, {0, 1}));
  CHECK(nfa_accepts(s, {}));
  CHECK_FALSE(nfa_accepts(s, {0}));
  CHECK(accepts_empty_word(s));
  CHECK(is_finite_language(s));
  CHECK_FALSE(is_finite_language(fixture::zero_star_one_plus()));
  CHECK(accepted_words_of_length(fixture::zero_star_one_plus(), 2) == std::vector<Word>{{0, 1}, {1, 1}});
  CHECK(nfa_is_empty(words_automaton({})));
}

TEST_CASE("determinize preserves the finite-word language") {
  gen::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    Automaton a = gen::buchi(rng, fixture::binary(), 4);
    a.set_mode(Acceptance::finite);
    const Automaton d = determinize(a);
    CHECK(d.is_deterministic());
    CHECK(oracle::accepted_words(a, 6) == oracle::accepted_words(d, 6));
  }
}

TEST_CASE("build_omega_from_pair") {
  const Automaton eps = words_automaton({{}});
  const Automaton one = words_automaton({{1}});
  const Automaton zero = words_automaton({{0}});
  const Automaton ones = build_omega_from_pair(eps, one);
  CHECK(buchi_accepts(ones, up("(1)")));
  CHECK_FALSE(buchi_accepts(ones, up("0(1)")));
  CHECK_FALSE(buchi_accepts(ones, up("(01)")));

  const Automaton zero_ones = build_omega_from_pair(zero, one);
  CHECK(buchi_accepts(zero_ones, up("0(1)")));
  CHECK_FALSE(buchi_accepts(zero_ones, up("(1)")));

  CHECK_FALSE(buchi_nonempty(build_omega_from_pair(words_automaton({}), one)));
  CHECK_THROWS_AS(build_omega_from_pair(one, eps), InputError);
}

TEST_CASE("build_omega_from_pair matches factorization on small languages") {
  // U = {0, 01}, V = {1, 10}: x is in U.V^omega iff it factors accordingly.
  const Automaton u = words_automaton({{0}, {0, 1}});
  const Automaton v = words_automaton({{1}, {1, 0}});
  const Automaton uv = build_omega_from_pair(u, v);
  CHECK(buchi_accepts(uv, up("0(1)")));
  CHECK(buchi_accepts(uv, up("0(10)")));
  CHECK(buchi_accepts(uv, up("01(10)")));
  CHECK_FALSE(buchi_accepts(uv, up("(0)")));
  CHECK_FALSE(buchi_accepts(uv, up("0(100)")));
  CHECK_FALSE(buchi_accepts(uv, up("1(1)")));
}

TEST_CASE("decomposition of infinitely many 1s") {
  const auto parts = decompose_monoalphabetic(fixture::zero_star_one());
  const auto it = std::find_if(parts.begin(), parts.end(), [](const DecompositionComponent& c) {
    return c.period_letters == LetterSet::from_mask(0b10);
  });
  REQUIRE(it != parts.end());
  CHECK(nfa_accepts(it->period, {1}));
  for (const auto& c : parts) CHECK_FALSE(accepts_empty_word(c.period));

  Automaton empty = fixture::zero_star_one();
  empty.set_accepting(1, false);
  CHECK(decompose_monoalphabetic(empty).empty());
}

TEST_CASE("decomposition reassembles the language of random automata") {
  gen::Rng rng(59);
  for (int i = 0; i < 40; ++i) {
    const Automaton a = gen::buchi(rng, Alphabet({"x", "y", "z"}), 3);
    const auto parts = decompose_monoalphabetic(a);
    for (const auto& c : parts) {
      for (const Word& w : oracle::accepted_words(c.period, 6)) CHECK(letters_of(w) == c.period_letters);
      for (const Word& w : oracle::accepted_words(c.prefix, 6)) CHECK(letters_of(w) == c.prefix_letters);
      CHECK(a.is_accepting(c.cut_state));
    }
    for (int j = 0; j < 30; ++j) {
      const UPWord x = gen::up_word(rng, 3, 4, 4);
      const bool in_union = std::any_of(parts.begin(), parts.end(), [&](const DecompositionComponent& c) {
        return buchi_accepts(build_omega_from_pair(c.prefix, c.period), x);
      });
      CHECK(buchi_accepts(a, x) == in_union);
    }
  }
}

TEST_CASE("intersection and liveness") {
  const Automaton ones = fixture::zero_star_one();
  const Automaton first_one = fixture::starts_with_one();
  const Automaton both = intersect(ones, first_one);
  CHECK(buchi_accepts(both, up("1(01)")));
  CHECK_FALSE(buchi_accepts(both, up("(01)")));
  CHECK_FALSE(buchi_accepts(both, up("1(0)")));

  CHECK(is_live_prefix(first_one, {1, 0}));
  CHECK_FALSE(is_live_prefix(first_one, {0}));
  CHECK(is_live_prefix(ones, {0, 0, 0}));
  const auto live = live_states(first_one);
  CHECK(live == std::vector<bool>{true, true});
}

TEST_CASE("find_lasso on an explicit graph") {
  // 0 -a-> 1 -b-> 2 -c-> 1, accepting {2}.
  const LassoGraph g{{{0, 1}}, {{1, 2}}, {{2, 1}}};
  const auto lasso = find_lasso(g, {0}, {false, false, true});
  REQUIRE(lasso);
  CHECK(lasso->anchor == 2);
  CHECK(lasso->stem == Word{0, 1});
  CHECK(lasso->cycle == Word{2, 1});
  CHECK_FALSE(find_lasso(g, {0}, {true, false, false}));
  CHECK(live_nodes(g, {false, false, true}) == std::vector<bool>{true, true, true});
  CHECK(live_nodes(g, {true, false, false}) == std::vector<bool>{false, false, false});
}
