#include "fbc/cfl.hpp"

#include <set>

#include "doctest.h"
#include "fbc/oracle.hpp"
#include "fbc/parse.hpp"
#include "fixtures.hpp"

using namespace fbc;
using namespace fbctest;

namespace {

const char* kAllWords = R"(S -> 1 | a S | a^-1 S | b S | b^-1 S | t S | t^-1 S)";

std::set<GroupWord> intersectBrute(const Cfg& g, const GroupNfa& a,
                                   int maxlen) {
  std::set<GroupWord> out;
  for (const auto& w : enumerateCfg(g, maxlen))
    if (a.accepts(w)) out.insert(w);
  return out;
}

}  // namespace

TEST_CASE("grammar parsing") {
  Alphabet a = ab();
  Cfg dyck = parseCfg(a, "S -> a S a^-1 | 1");
  CHECK(dyck.nonterminals.size() == 1);
  CHECK(dyck.productions.size() == 2);

  CHECK_THROWS_AS(parseCfg(a, "S -> T"), SyntaxError);
  CHECK_THROWS_AS(parseCfg(a, "S -> T"), UnknownTerminal);
  CHECK_THROWS_AS(parseCfg(a, "S = a"), SyntaxError);
  CHECK_THROWS_AS(parseCfg(a, ""), SyntaxError);
  CHECK_NOTHROW(parseCfg(a, kAllWords));

  // Multi-line alternatives accumulate on the same nonterminal.
  Cfg two = parseCfg(a, "S -> a\nS -> b\n");
  CHECK(two.nonterminals.size() == 1);
  CHECK(enumerateCfg(two, 2).size() == 2);
}

TEST_CASE("enumeration and emptiness") {
  Alphabet a = ab();
  Cfg dyck = parseCfg(a, "S -> a S a^-1 | 1");
  auto words = enumerateCfg(dyck, 6);
  CHECK(words.size() == 4);  // 1, a a^-1, a^2 a^-2, a^3 a^-3
  CHECK_FALSE(isEmpty(dyck));

  Cfg dead = parseCfg(a, "S -> a S");
  CHECK(isEmpty(dead));
  CHECK(enumerateCfg(dead, 8).empty());
  CHECK_FALSE(shortestCfgWord(dead).has_value());

  Cfg mixed = parseCfg(a, "S -> a S b | T\nT -> b b");
  auto w = shortestCfgWord(mixed);
  REQUIRE(w.has_value());
  CHECK(*w == GroupWord{2, 2});
}

TEST_CASE("bar-hillel boundary cases") {
  Alphabet a = ab();
  Cfg dyck = parseCfg(a, "S -> a S a^-1 S | b S b^-1 S | 1");
  GroupNfa one = GroupNfa::singleWord(2, {1, -1});
  CHECK_FALSE(isEmpty(barHillel(dyck, one)));
  CHECK(isEmpty(barHillel(dyck, GroupNfa::singleWord(2, {1, 1}))));
  CHECK(isEmpty(barHillel(dyck, GroupNfa::empty(2))));

  Cfg other(parseCfg(Alphabet({"x"}), "S -> x"));
  CHECK_THROWS_AS(barHillel(other, one), AlphabetMismatch);
}

TEST_CASE("bar-hillel equals brute-force intersection on enumerations") {
  Alphabet alpha = ab();
  std::vector<Cfg> grammars = {
      parseCfg(alpha, "S -> a S a^-1 S | b S b^-1 S | 1"),
      parseCfg(alpha, "S -> a S b | 1"),
      parseCfg(alpha, "S -> a S a | b S b | a | b | 1"),  // palindromes
      parseCfg(alpha, "S -> t S t^-1 | A\nA -> a A | 1"),
      parseCfg(alpha, "S -> 1 | a S | a^-1 S | b S | b^-1 S"),
  };
  std::vector<GroupNfa> automata = {
      GroupNfa::singleWord(2, {1, -1}),
      plusNfa(GroupNfa::singleWord(2, {1, 2})),
      unionNfa(GroupNfa::singleWord(2, {}),
               plusNfa(GroupNfa::singleWord(2, {1}))),
      concatNfa(plusNfa(GroupNfa::singleWord(2, {3})),
                plusNfa(GroupNfa::singleWord(2, {1, -3}))),
  };
  int pairs = 0;
  for (size_t gi = 0; gi < grammars.size(); ++gi) {
    for (size_t ai = 0; ai < automata.size(); ++ai) {
      int maxlen = gi == 4 ? 6 : 8;  // the all-words grammar grows fastest
      Cfg inter = barHillel(grammars[gi], automata[ai]);
      std::set<GroupWord> brute =
          intersectBrute(grammars[gi], automata[ai], maxlen);
      auto enumerated = enumerateCfg(inter, maxlen);
      CHECK(std::set<GroupWord>(enumerated.begin(), enumerated.end()) ==
            brute);
      CHECK(isEmpty(inter) == (shortestCfgWord(inter) == std::nullopt));
      ++pairs;
    }
  }
  CHECK(pairs >= 10);
}

TEST_CASE("constrained conjugacy: unconstrained grammar = plain conjugacy") {
  GroupPresentation pres = sigmaPres();
  Cfg all = parseCfg(pres.alphabet(), kAllWords);
  FbcElement h = parseElement(pres, "t a");
  FbcElement g = parseElement(pres, "t b");
  SearchBudget budget;

  auto dec = constrainedConjugacy(g, h, all, budget);
  REQUIRE(dec.isYes());
  CHECK(fbcConjugate(h, *dec.certificate).sameValue(g));

  // Different t-exponents: exact plain No.
  CHECK(constrainedConjugacy(parseElement(pres, "t^2 a"), h, all, budget)
            .isNo());
}

TEST_CASE("constrained conjugacy: empty constraint set is always No") {
  GroupPresentation pres = sigmaPres();
  Cfg dead = parseCfg(pres.alphabet(), "S -> a S");
  FbcElement h = parseElement(pres, "t a");
  FbcElement g = fbcConjugate(h, parseElement(pres, "b"));
  auto dec = constrainedConjugacy(g, h, dead, SearchBudget{});
  CHECK(dec.isNo());
}

TEST_CASE("constrained conjugacy discriminates singleton constraints") {
  GroupPresentation pres = sigmaPres();
  FbcElement h = parseElement(pres, "t a");
  FbcElement g = parseElement(pres, "t b");
  // b conjugates h to g; a does not.
  CHECK(fbcConjugate(h, parseElement(pres, "b")).sameValue(g));
  CHECK_FALSE(fbcConjugate(h, parseElement(pres, "a")).sameValue(g));

  auto yes = constrainedConjugacy(g, h, parseCfg(pres.alphabet(), "S -> b"),
                                  SearchBudget{});
  REQUIRE(yes.isYes());
  CHECK(fbcConjugate(h, *yes.certificate).sameValue(g));

  auto no = constrainedConjugacy(g, h, parseCfg(pres.alphabet(), "S -> a"),
                                 SearchBudget{});
  CHECK(no.isNo());
}

TEST_CASE("decision matches an oracle scan over ball conjugators") {
  GroupPresentation pres = sigmaPres();
  FbcElement h = parseElement(pres, "t a");
  FbcElement g = parseElement(pres, "t b");
  // K = elements with even t-exponent (full preimage: even t-letter sum).
  Cfg evenT = parseCfg(pres.alphabet(), R"(
E -> 1 | a E | a^-1 E | b E | b^-1 E | t O | t^-1 O
O -> a O | a^-1 O | b O | b^-1 O | t E | t^-1 E
)");
  auto dec = constrainedConjugacy(g, h, evenT, SearchBudget{});

  bool oracleFound = false;
  for (const FbcElement& w : ball(pres, 3, 3).elements)
    if (w.t % 2 == 0 && fbcConjugate(h, w).sameValue(g)) {
      oracleFound = true;
      break;
    }
  CHECK(oracleFound);  // e.g. (t a)^2 b
  REQUIRE(dec.isYes());
  CHECK(fbcConjugate(h, *dec.certificate).sameValue(g));
  CHECK(dec.certificate->t % 2 == 0);
}
