#include "fbc/ratlang.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fbc/centralizer.hpp"
#include "fbc/oracle.hpp"
#include "fbc/parse.hpp"
#include "fixtures.hpp"

using namespace fbc;
using namespace fbctest;

namespace {

std::set<GroupWord> wordSet(const GroupNfa& a, int maxlen) {
  auto v = enumerateNfa(a, maxlen);
  return {v.begin(), v.end()};
}

std::set<GroupWord> truncate(const std::set<GroupWord>& s, int maxlen) {
  std::set<GroupWord> out;
  for (const auto& w : s)
    if (static_cast<int>(w.size()) <= maxlen) out.insert(w);
  return out;
}

}  // namespace

TEST_CASE("single-word and empty automata") {
  GroupWord w{1, -2, 3};
  GroupNfa a = GroupNfa::singleWord(2, w);
  CHECK(a.accepts(w));
  CHECK_FALSE(a.accepts({1, -2}));
  CHECK_FALSE(a.accepts({}));
  CHECK(enumerateNfa(a, 8) == std::vector<GroupWord>{w});

  GroupNfa none = GroupNfa::empty(2);
  CHECK_FALSE(none.accepts({}));
  CHECK(enumerateNfa(none, 8).empty());
}

TEST_CASE("regular operations agree with brute-force word-set operations") {
  GroupNfa a = unionNfa(GroupNfa::singleWord(2, {1}),
                        GroupNfa::singleWord(2, {2, -1}));
  GroupNfa b = unionNfa(GroupNfa::singleWord(2, {-2}),
                        GroupNfa::singleWord(2, {3, 1}));
  auto sa = wordSet(a, 8);
  auto sb = wordSet(b, 8);

  SUBCASE("union") {
    std::set<GroupWord> expect = sa;
    expect.insert(sb.begin(), sb.end());
    CHECK(wordSet(unionNfa(a, b), 8) == expect);
  }
  SUBCASE("concat") {
    std::set<GroupWord> expect;
    for (const auto& u : sa)
      for (const auto& v : sb) {
        GroupWord w = u;
        w.insert(w.end(), v.begin(), v.end());
        expect.insert(w);
      }
    CHECK(wordSet(concatNfa(a, b), 8) == truncate(expect, 8));
  }
  SUBCASE("plus") {
    std::set<GroupWord> expect = sa, layer = sa;
    for (int i = 0; i < 8; ++i) {
      std::set<GroupWord> next;
      for (const auto& u : layer)
        for (const auto& v : sa) {
          GroupWord w = u;
          w.insert(w.end(), v.begin(), v.end());
          if (static_cast<int>(w.size()) <= 8) next.insert(w);
        }
      layer = next;
      expect.insert(next.begin(), next.end());
    }
    CHECK(wordSet(plusNfa(a), 8) == truncate(expect, 8));
  }
  SUBCASE("inversion") {
    std::set<GroupWord> expect;
    for (const auto& u : sa) {
      GroupWord w;
      for (auto it = u.rbegin(); it != u.rend(); ++it) w.push_back(-*it);
      expect.insert(w);
    }
    CHECK(wordSet(inversionNfa(a), 8) == expect);
  }
}

TEST_CASE("group word evaluation") {
  GroupPresentation pres = sigmaPres();
  // t a t^-1 b: value t^0 ... compute directly.
  FbcElement v = evaluateGroupWord(pres, {3, 1, -3, 2});
  FbcElement expect = fbcMul(
      fbcMul(fbcElement(pres, 1, Word()), fbcElement(pres, 0, Word::generator(0))),
      fbcMul(fbcElement(pres, -1, Word()), fbcElement(pres, 0, Word::generator(1))));
  CHECK(v.sameValue(expect));
  CHECK(evaluateGroupWord(pres, {}).sameValue(fbcIdentity(pres)));
}

TEST_CASE("subgroup automaton spells exactly the subgroup") {
  SubgroupGraph g = SubgroupGraph::build(
      2, {power(Word::generator(0), 2), Word::generator(1)});
  GroupNfa a = subgroupNfa(g);
  GroupPresentation pres = idPres();
  for (const auto& w : enumerateNfa(a, 6)) {
    FbcElement val = evaluateGroupWord(pres, w);
    CHECK(val.t == 0);
    CHECK(g.contains(val.u));
  }
  // Reduced spellings of members are accepted.
  CHECK(a.accepts({1, 1}));
  CHECK(a.accepts({2}));
  CHECK(a.accepts({-1, -1, 2, 1, 1}));
  CHECK_FALSE(a.accepts({1}));
}

TEST_CASE("automorphism image automaton") {
  GroupNfa a = GroupNfa::singleWord(2, {1, 3, 2});  // a t b
  GroupNfa img = applyAutomorphismNfa(a, nu(), 1);  // a -> ab, b -> b
  CHECK(img.accepts({1, 2, 3, 2}));
  CHECK_FALSE(img.accepts({1, 3, 2}));
  // Inverse images via e = -1.
  GroupNfa pre = applyAutomorphismNfa(a, nu(), -1);
  CHECK(pre.accepts({1, -2, 3, 2}));  // nu^-1: a -> a b^-1, b -> b
}

TEST_CASE("centralizer automaton: soundness and desk-scale completeness") {
  GroupPresentation pres = sigmaPres();
  FbcElement g = parseElement(pres, "t^2 a");
  CentralizerResult C = centralize(g, SearchBudget{});
  GroupNfa A = buildCentralizerNfa(C, pres.phi());

  int accepted = 0;
  for (const auto& w : enumerateNfa(A, 8)) {
    CHECK(fbcCommute(evaluateGroupWord(pres, w), g));
    ++accepted;
  }
  CHECK(accepted > 0);

  // Every small centralizer element is the value of some accepted word.
  auto words = enumerateNfa(A, 10);
  for (const FbcElement& h : bruteCentralizer(g, 3, 3)) {
    bool hit = false;
    for (const auto& w : words)
      if (evaluateGroupWord(pres, w).sameValue(h)) {
        hit = true;
        break;
      }
    CHECK(hit);
  }
}

TEST_CASE("loop automaton covers the a = 0 case") {
  GroupPresentation pres = nuPres();
  FbcElement g = parseElement(pres, "a");
  CentralizerResult C = centralize(g, SearchBudget{});
  REQUIRE_FALSE(C.torusGenerator.has_value());
  GroupNfa A = buildCentralizerNfa(C, pres.phi());
  for (const auto& w : enumerateNfa(A, 6))
    CHECK(fbcCommute(evaluateGroupWord(pres, w), g));
  CHECK(A.accepts({1, 1}));
}

TEST_CASE("automaton files round trip") {
  Alphabet a = ab();
  GroupNfa nfa = unionNfa(GroupNfa::singleWord(2, {1, -3}),
                          GroupNfa::singleWord(2, {2, 2}));
  std::string text = formatNfa(a, nfa);
  std::istringstream in(text);
  GroupNfa back = parseNfa(a, in);
  CHECK(wordSet(back, 6) == wordSet(nfa, 6));

  std::istringstream bad("states 1\ninitial 0\naccept 0\nedge 0 0 q\n");
  CHECK_THROWS_AS(parseNfa(a, bad), Error);
  std::istringstream noStates("initial 0\n");
  CHECK_THROWS_AS(parseNfa(a, noStates), ParseError);
}

TEST_CASE("group words format with t letters") {
  Alphabet a = ab();
  CHECK(formatGroupWord(a, {3, 1, -2}) == "t a b^-1");
  CHECK(formatGroupWord(a, {}) == "1");
}
