#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fbc/ratlang.hpp"

namespace fbc {

// Context-free grammar over the group alphabet {t^+-1} u generators^+-1.
// Kept general (no normal form); Bar-Hillel binarizes internally.
struct Cfg {
  struct Symbol {
    bool terminal;
    int value;  // letter code when terminal, nonterminal index otherwise
  };
  struct Production {
    int lhs;
    std::vector<Symbol> rhs;
  };

  int alphabetRank = 0;
  std::vector<std::string> nonterminals;
  std::vector<Production> productions;
  int start = 0;  // first declared nonterminal
};

// Grammar file: lines `N -> rhs | rhs ...`; an rhs is a space-separated mix
// of nonterminals and alphabet letters, with `1` for the empty string.
Cfg parseCfg(const Alphabet& alphabet, std::istream& in);
Cfg parseCfg(const Alphabet& alphabet, const std::string& text);
std::string formatCfg(const Alphabet& alphabet, const Cfg& g);

// Triple construction: L(result) = L(g) intersect L(a).
Cfg barHillel(const Cfg& g, const GroupNfa& a);

bool isEmpty(const Cfg& g);

// A shortest derivable terminal string, or nullopt when the language is
// empty. Deterministic.
std::optional<GroupWord> shortestCfgWord(const Cfg& g);

// All derivable strings of length <= maxlen, ordered by length then letters.
std::vector<GroupWord> enumerateCfg(const Cfg& g, int maxlen);

// Corollary-style constrained conjugacy: is some element of K, described by
// a grammar for its full word preimage, a conjugator taking h to g?  The
// precondition that L(grammar) is a full preimage is the caller's warrant.
// A Yes carries a verified conjugating element.
Decision<FbcElement> constrainedConjugacy(const FbcElement& g,
                                          const FbcElement& h, const Cfg& K,
                                          const SearchBudget& budget);

}  // namespace fbc
