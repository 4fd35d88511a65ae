#include <doctest.h>

#include "realtrace/errors.hpp"
#include "realtrace/metric.hpp"
#include "realtrace/testing/fixtures.hpp"
#include "realtrace/testing/generators.hpp"
#include "realtrace/testing/oracles.hpp"

using namespace realtrace;

namespace {

FiniteTrace phi(std::string_view w) { return phi_word(fixture::da3(), w); }

std::set<FiniteTrace> traces(std::initializer_list<std::string_view> ws) {
  std::set<FiniteTrace> out;
  for (auto w : ws) out.insert(phi(w));
  return out;
}

}  // namespace

TEST_CASE("enumerate_prefixes") {
  CHECK(enumerate_prefixes(phi("abc"), 2) == traces({"", "a", "ab"}));
  CHECK(enumerate_prefixes(phi("acb"), 1) == traces({"", "a", "c"}));
  CHECK(enumerate_prefixes(phi(""), 5) == traces({""}));
  CHECK(enumerate_prefixes(phi("acb"), 0) == traces({""}));
  CHECK(enumerate_prefixes(phi("acb"), 9) == traces({"", "a", "c", "ac", "acb"}));
}

TEST_CASE("ideal enumeration refuses traces above 64 vertices") {
  const FiniteTrace big = phi_word(fixture::da3(), Word(65, 0));
  CHECK_THROWS_AS(enumerate_prefixes(big, 2), PreconditionError);
  Word near(64, 0);
  near.push_back(1);
  CHECK_THROWS_AS(l_pref(big, phi_word(fixture::da3(), near), 3), PreconditionError);
  CHECK(enumerate_prefixes(phi_word(fixture::da3(), Word(64, 0)), 2).size() == 3);
}

TEST_CASE("ideal counts match the recursive counter") {
  const AlphabetRef da = fixture::da3();
  gen::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const Word w = gen::word_up_to(rng, 3, 10);
    const FiniteTrace t = phi_word(da, w);
    CHECK(enumerate_prefixes(t, t.size()).size() == oracle::count_ideals(*da, w));
  }
}

TEST_CASE("l_pref and d_pref on the documented pairs") {
  CHECK(l_pref(phi("aba"), phi("abb"), 8) == PrefixAgreement{2, 8});
  CHECK(d_pref(phi("aba"), phi("abb"), 8).to_string() == "1/4");
  CHECK(l_pref(phi("a"), phi("c"), 8) == PrefixAgreement{0, 8});
  CHECK(d_pref(phi("a"), phi("c"), 8).to_string() == "1");
  const auto same = l_pref(phi("abc"), phi("abc"), 8);
  CHECK(same.saturated());
  CHECK(same.to_string() == ">=8");
  CHECK(d_pref(phi("abc"), phi("abc"), 8).to_string() == "[0,1/256]");
  CHECK(d_pref(phi("abc"), phi("abc"), 70).to_string() == "[0,1/2^70]");
}

TEST_CASE("l_pref preconditions") {
  CHECK_THROWS_AS(l_pref(phi("a"), phi("c"), 0), PreconditionError);
  const AlphabetRef other = validate_alphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_THROWS_AS(l_pref(phi("a"), phi_word(other, "a"), 3), InputError);
  const AlphabetRef loose = validate_alphabet({"a", "b"}, {{"a", "a"}}, true);
  CHECK_THROWS_AS(l_pref(phi_word(loose, "a"), phi_word(loose, "b"), 3), InputError);
}

TEST_CASE("a proper prefix stops agreeing at its own length") {
  CHECK(l_pref(phi("ab"), phi("abab"), 8).value == 2);
  CHECK(l_pref(FiniteTrace::empty_trace(fixture::da3()), phi("b"), 8).value == 0);
}

TEST_CASE("l_pref laws on random traces") {
  const AlphabetRef da = fixture::da3();
  gen::Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    const Word head = gen::word_up_to(rng, 3, 5);
    auto draw = [&] {
      Word w = head;
      for (Letter a : gen::word_up_to(rng, 3, 4)) w.push_back(a);
      return w;
    };
    const Word ws = draw();
    const Word wt = draw();
    const Word wu = draw();
    const FiniteTrace s = phi_word(da, ws);
    const FiniteTrace t = phi_word(da, wt);
    const FiniteTrace u = phi_word(da, wu);
    for (std::size_t cap : {1, 3, 8}) {
      CHECK(l_pref(s, t, cap) == l_pref(t, s, cap));
      CHECK(std::min(l_pref(s, t, cap).at_least(), l_pref(t, u, cap).at_least()) <= l_pref(s, u, cap).at_least());
      CHECK(l_pref(s, t, cap).at_least() == oracle::l_pref(*da, ws, wt, cap));
    }
    CHECK(l_pref(s, t, std::max<std::size_t>({ws.size(), wt.size(), 1})).saturated() == (s == t));
  }
}

TEST_CASE("word_l_pref") {
  const UPWord one_then_ones({0}, {1});
  const UPWord zeros({}, {0});
  CHECK(word_l_pref(one_then_ones, zeros, 8).value == 1);
  CHECK(word_l_pref(zeros, zeros, 8).saturated());
  const UPWord x({}, {0, 1});
  const UPWord y({0}, {1, 0});
  CHECK(oracle::same_infinite_word({}, {0, 1}, {0}, {1, 0}));
  for (std::size_t cap : {1, 5, 100}) CHECK(word_l_pref(x, y, cap).saturated());
  CHECK(word_l_pref(Word{0, 1, 1}, Word{0, 1, 0}, 8).value == 2);
  CHECK(word_l_pref(Word{0, 1}, Word{0, 1}, 8).saturated());
  CHECK(word_l_pref(Word{0, 1}, Word{0, 1, 1}, 8).value == 2);
  CHECK(word_l_pref(Word{0, 1}, x, 8).value == 2);
  CHECK(word_l_pref(Word{0, 1, 0, 1}, x, 3).saturated());
  CHECK(word_l_pref(x, Word{1}, 8).value == 0);
}
