#include "fbc/cfl.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "fbc/centralizer.hpp"
#include "fbc/errors.hpp"
#include "fbc/parse.hpp"

namespace fbc {

namespace {

int groupLetterKey(int rank, GroupLetter l) {
  return l > 0 ? l - 1 : (rank + 1) + (-l - 1);
}

void sortWordSet(int rank, std::vector<GroupWord>& words) {
  std::sort(words.begin(), words.end(),
            [&](const GroupWord& x, const GroupWord& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              for (size_t i = 0; i < x.size(); ++i)
                if (x[i] != y[i])
                  return groupLetterKey(rank, x[i]) <
                         groupLetterKey(rank, y[i]);
              return false;
            });
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

// Internal near-binary form: every rhs is empty, a single terminal, a single
// nonterminal, or a pair of nonterminals.
Cfg binarize(const Cfg& g) {
  Cfg out;
  out.alphabetRank = g.alphabetRank;
  out.nonterminals = g.nonterminals;
  out.start = g.start;
  auto fresh = [&] {
    out.nonterminals.push_back("_" + std::to_string(out.nonterminals.size()));
    return static_cast<int>(out.nonterminals.size()) - 1;
  };
  for (const auto& p : g.productions) {
    if (p.rhs.size() <= 1) {
      out.productions.push_back(p);
      continue;
    }
    // Lift terminals occurring in long right sides to unit nonterminals.
    std::vector<int> parts;
    for (const auto& s : p.rhs) {
      if (!s.terminal) {
        parts.push_back(s.value);
        continue;
      }
      int n = fresh();
      out.productions.push_back({n, {s}});
      parts.push_back(n);
    }
    // Fold the chain right to left.
    int right = parts.back();
    for (int i = static_cast<int>(parts.size()) - 2; i >= 1; --i) {
      int n = fresh();
      out.productions.push_back(
          {n, {{false, parts[i]}, {false, right}}});
      right = n;
    }
    out.productions.push_back({p.lhs, {{false, parts[0]}, {false, right}}});
  }
  return out;
}

std::vector<bool> productiveNonterminals(const Cfg& g) {
  std::vector<bool> productive(g.nonterminals.size(), false);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& p : g.productions) {
      if (productive[p.lhs]) continue;
      bool all = true;
      for (const auto& s : p.rhs)
        if (!s.terminal && !productive[s.value]) {
          all = false;
          break;
        }
      if (all) {
        productive[p.lhs] = true;
        grew = true;
      }
    }
  }
  return productive;
}

}  // namespace

Cfg parseCfg(const Alphabet& alphabet, std::istream& in) {
  struct Line {
    int lineno;
    std::string lhs;
    std::vector<std::vector<std::string>> alternatives;
  };
  std::vector<Line> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto toks = splitTokens(raw);
    if (toks.empty()) continue;
    if (toks.size() < 2 || toks[1] != "->")
      throw SyntaxError("grammar line " + std::to_string(lineno) +
                        ": expected `N -> rhs | rhs ...`");
    Line line{lineno, toks[0], {{}}};
    for (size_t i = 2; i < toks.size(); ++i) {
      if (toks[i] == "|")
        line.alternatives.emplace_back();
      else
        line.alternatives.back().push_back(toks[i]);
    }
    lines.push_back(std::move(line));
  }
  if (lines.empty()) throw SyntaxError("grammar has no productions");

  Cfg g;
  g.alphabetRank = alphabet.rank();
  std::map<std::string, int> index;
  for (const auto& line : lines)
    if (!index.count(line.lhs)) {
      index[line.lhs] = static_cast<int>(g.nonterminals.size());
      g.nonterminals.push_back(line.lhs);
    }
  g.start = 0;
  for (const auto& line : lines)
    for (const auto& alt : line.alternatives) {
      Cfg::Production p{index[line.lhs], {}};
      for (const auto& tok : alt) {
        if (tok == "1") continue;  // empty-string marker
        auto it = index.find(tok);
        if (it != index.end()) {
          p.rhs.push_back({false, it->second});
          continue;
        }
        try {
          p.rhs.push_back({true, parseGroupLetter(alphabet, tok)});
        } catch (const Error&) {
          throw UnknownTerminal("grammar line " + std::to_string(line.lineno) +
                                ": '" + tok +
                                "' is neither a nonterminal nor a letter");
        }
      }
      g.productions.push_back(std::move(p));
    }
  return g;
}

Cfg parseCfg(const Alphabet& alphabet, const std::string& text) {
  std::istringstream in(text);
  return parseCfg(alphabet, in);
}

std::string formatCfg(const Alphabet& alphabet, const Cfg& g) {
  std::ostringstream os;
  for (int n = 0; n < static_cast<int>(g.nonterminals.size()); ++n) {
    bool any = false;
    for (const auto& p : g.productions) {
      if (p.lhs != n) continue;
      os << (any ? " | " : g.nonterminals[n] + " ->");
      if (!any) os << ' ';
      any = true;
      if (p.rhs.empty()) {
        os << '1';
        continue;
      }
      for (size_t i = 0; i < p.rhs.size(); ++i) {
        if (i) os << ' ';
        os << (p.rhs[i].terminal
                   ? formatGroupLetter(alphabet, p.rhs[i].value)
                   : g.nonterminals[p.rhs[i].value]);
      }
    }
    if (any) os << '\n';
  }
  return os.str();
}

Cfg barHillel(const Cfg& g, const GroupNfa& a) {
  if (g.alphabetRank != a.alphabetRank())
    throw AlphabetMismatch("grammar and automaton use different alphabets");
  Cfg b = binarize(g);
  const int n = a.stateCount();
  const int nts = static_cast<int>(b.nonterminals.size());

  Cfg out;
  out.alphabetRank = g.alphabetRank;
  auto triple = [&](int p, int nt, int q) { return (p * nts + nt) * n + q; };
  out.nonterminals.resize(static_cast<size_t>(n) * nts * n);
  for (int p = 0; p < n; ++p)
    for (int nt = 0; nt < nts; ++nt)
      for (int q = 0; q < n; ++q)
        out.nonterminals[triple(p, nt, q)] =
            "[" + std::to_string(p) + "," + b.nonterminals[nt] + "," +
            std::to_string(q) + "]";
  int startSym = static_cast<int>(out.nonterminals.size());
  out.nonterminals.push_back("S!");
  out.start = startSym;
  for (int i : a.initialStates())
    for (int f : a.acceptingStates())
      out.productions.push_back(
          {startSym, {{false, triple(i, b.start, f)}}});

  for (const auto& p : b.productions) {
    if (p.rhs.empty()) {
      for (int q = 0; q < n; ++q)
        out.productions.push_back({triple(q, p.lhs, q), {}});
    } else if (p.rhs.size() == 1 && p.rhs[0].terminal) {
      for (const auto& tr : a.transitions())
        if (tr.letter == p.rhs[0].value)
          out.productions.push_back(
              {triple(tr.from, p.lhs, tr.to), {p.rhs[0]}});
    } else if (p.rhs.size() == 1) {
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          out.productions.push_back(
              {triple(q, p.lhs, r), {{false, triple(q, p.rhs[0].value, r)}}});
    } else {  // pair of nonterminals
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s)
            out.productions.push_back({triple(q, p.lhs, s),
                                       {{false, triple(q, p.rhs[0].value, r)},
                                        {false, triple(r, p.rhs[1].value, s)}}});
    }
  }
  return out;
}

bool isEmpty(const Cfg& g) {
  return !productiveNonterminals(g)[g.start];
}

std::optional<GroupWord> shortestCfgWord(const Cfg& g) {
  // Bottom-up fixpoint carrying one shortest witness per nonterminal.
  std::vector<std::optional<GroupWord>> best(g.nonterminals.size());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& p : g.productions) {
      GroupWord cand;
      bool ok = true;
      for (const auto& s : p.rhs) {
        if (s.terminal) {
          cand.push_back(s.value);
        } else if (best[s.value]) {
          cand.insert(cand.end(), best[s.value]->begin(),
                      best[s.value]->end());
        } else {
          ok = false;
          break;
        }
      }
      if (ok && (!best[p.lhs] || cand.size() < best[p.lhs]->size())) {
        best[p.lhs] = std::move(cand);
        grew = true;
      }
    }
  }
  return best[g.start];
}

std::vector<GroupWord> enumerateCfg(const Cfg& g, int maxlen) {
  // Monotone fixpoint over per-nonterminal word sets bounded by maxlen.
  std::vector<std::set<GroupWord>> lang(g.nonterminals.size());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& p : g.productions) {
      std::vector<GroupWord> partial{GroupWord{}};
      for (const auto& s : p.rhs) {
        std::vector<GroupWord> next;
        if (s.terminal) {
          for (auto w : partial) {
            if (static_cast<int>(w.size()) >= maxlen) continue;
            w.push_back(s.value);
            next.push_back(std::move(w));
          }
        } else {
          for (const auto& w : partial)
            for (const auto& tail : lang[s.value]) {
              if (static_cast<int>(w.size() + tail.size()) > maxlen) continue;
              GroupWord joined = w;
              joined.insert(joined.end(), tail.begin(), tail.end());
              next.push_back(std::move(joined));
            }
        }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      for (auto& w : partial)
        if (lang[p.lhs].insert(std::move(w)).second) grew = true;
    }
  }
  std::vector<GroupWord> out(lang[g.start].begin(), lang[g.start].end());
  sortWordSet(g.alphabetRank, out);
  return out;
}

Decision<FbcElement> constrainedConjugacy(const FbcElement& g,
                                          const FbcElement& h, const Cfg& K,
                                          const SearchBudget& budget) {
  if (g.pres.rank() != K.alphabetRank)
    throw AlphabetMismatch("grammar alphabet does not match the presentation");
  // The corollary's orientation: look for w in K with h^w = g.
  auto dec = conjugators(h, g, budget);
  if (dec.isNo()) return Decision<FbcElement>::no();
  if (!dec.isYes()) return Decision<FbcElement>::unknown();

  const FbcElement& witness = dec.certificate->witness;
  GroupWord wWord;
  const int rank = g.pres.rank();
  for (int i = 0; i < std::abs(witness.t); ++i)
    wWord.push_back(witness.t > 0 ? rank + 1 : -(rank + 1));
  for (Letter l : witness.u.letters()) wWord.push_back(l);
  GroupNfa solutions =
      concatNfa(buildCentralizerNfa(dec.certificate->centralizer,
                                    g.pres.phi()),
                GroupNfa::singleWord(rank, wWord));

  auto word = shortestCfgWord(barHillel(K, solutions));
  if (!word) {
    // An incomplete solution automaton cannot certify absence.
    if (dec.certificate->centralizer.status == CentralizerStatus::BudgetLimited)
      return Decision<FbcElement>::unknown();
    return Decision<FbcElement>::no();
  }
  FbcElement conj = evaluateGroupWord(g.pres, *word);
  if (!fbcConjugate(h, conj).sameValue(g))
    throw Error("constrained conjugacy witness failed exact verification");
  return Decision<FbcElement>::yes(conj);
}

}  // namespace fbc
