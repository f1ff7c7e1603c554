#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fbc/centralizer.hpp"
#include "fbc/element.hpp"

namespace fbc {

// Letters over the group alphabet: +-(i+1) for generator i, +-(rank+1) for t.
using GroupLetter = int;
using GroupWord = std::vector<GroupLetter>;

// Finite automaton over {t^+-1} u generators^+-1. Epsilon-free after
// construction; all operations return normalized automata.
class GroupNfa {
 public:
  struct Transition {
    int from;
    int to;
    GroupLetter letter;  // 0 is epsilon, only during construction
  };

  GroupNfa(int alphabetRank, int states, std::vector<Transition> transitions,
           std::vector<int> initial, std::vector<int> accepting);

  static GroupNfa empty(int alphabetRank);
  static GroupNfa singleWord(int alphabetRank, const GroupWord& w);

  int alphabetRank() const { return rank_; }
  int stateCount() const { return states_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<int>& initialStates() const { return initial_; }
  const std::vector<int>& acceptingStates() const { return accepting_; }

  bool accepts(const GroupWord& w) const;

 private:
  void normalize();  // epsilon elimination + dedup

  int rank_;
  int states_;
  std::vector<Transition> transitions_;
  std::vector<int> initial_;
  std::vector<int> accepting_;
};

GroupNfa unionNfa(const GroupNfa& a, const GroupNfa& b);
GroupNfa concatNfa(const GroupNfa& a, const GroupNfa& b);
GroupNfa plusNfa(const GroupNfa& a);
// Accepted words are the reversed letterwise inverses of a's words.
GroupNfa inversionNfa(const GroupNfa& a);

// Image under phi^e: generator edges become paths spelling the image word;
// t edges are unchanged.
GroupNfa applyAutomorphismNfa(const GroupNfa& a, const Automorphism& phi,
                              int e);

// All accepted words of length <= maxlen, ordered by length then letters.
std::vector<GroupWord> enumerateNfa(const GroupNfa& a, int maxlen);

// Evaluation of a group word in F_n x| Z.
FbcElement evaluateGroupWord(const GroupPresentation& pres, const GroupWord& w);

// Loop automaton of a folded subgroup graph (base state initial+accepting).
GroupNfa subgroupNfa(const SubgroupGraph& graph);

// The centralizer automaton S^-1 u C_0 u S, with
// S = (C_{e_a} t^{e_a})^+ C_{e_a} and C_{e_a} = (C_0) phi^{e_a} z.
// For a torus-free or a = 0 result, the loop automaton of the generators.
GroupNfa buildCentralizerNfa(const CentralizerResult& C,
                             const Automorphism& phi);

// Automaton file format: `states n`, `initial i ...`, `accept j ...`,
// `edge p q <letter>` lines.
GroupNfa parseNfa(const Alphabet& alphabet, std::istream& in);
std::string formatNfa(const Alphabet& alphabet, const GroupNfa& a);

std::string formatGroupWord(const Alphabet& alphabet, const GroupWord& w);

}  // namespace fbc
