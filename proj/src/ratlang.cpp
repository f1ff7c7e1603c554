#include "fbc/ratlang.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fbc/errors.hpp"
#include "fbc/parse.hpp"

namespace fbc {

namespace {

// t sorts after the generators; positives before inverses throughout.
int groupLetterKey(int rank, GroupLetter l) {
  return l > 0 ? l - 1 : (rank + 1) + (-l - 1);
}

void checkSameRank(const GroupNfa& a, const GroupNfa& b) {
  if (a.alphabetRank() != b.alphabetRank())
    throw AlphabetMismatch("automata over different alphabets");
}

}  // namespace

GroupNfa::GroupNfa(int alphabetRank, int states,
                   std::vector<Transition> transitions,
                   std::vector<int> initial, std::vector<int> accepting)
    : rank_(alphabetRank),
      states_(states),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)) {
  for (const auto& tr : transitions_) {
    if (tr.from < 0 || tr.from >= states_ || tr.to < 0 || tr.to >= states_)
      throw Error("transition references an undeclared state");
    if (std::abs(tr.letter) > rank_ + 1)
      throw AlphabetMismatch("transition letter outside the group alphabet");
  }
  normalize();
}

GroupNfa GroupNfa::empty(int alphabetRank) {
  return {alphabetRank, 1, {}, {0}, {}};
}

GroupNfa GroupNfa::singleWord(int alphabetRank, const GroupWord& w) {
  std::vector<Transition> ts;
  for (size_t i = 0; i < w.size(); ++i)
    ts.push_back({static_cast<int>(i), static_cast<int>(i) + 1, w[i]});
  return {alphabetRank, static_cast<int>(w.size()) + 1, std::move(ts), {0},
          {static_cast<int>(w.size())}};
}

void GroupNfa::normalize() {
  const int n = states_;
  // Epsilon closures.
  std::vector<std::set<int>> closure(n);
  for (int s = 0; s < n; ++s) closure[s].insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& tr : transitions_) {
      if (tr.letter != 0) continue;
      for (int s = 0; s < n; ++s) {
        if (!closure[s].count(tr.from)) continue;
        if (closure[s].insert(tr.to).second) grew = true;
      }
    }
  }
  std::set<std::tuple<int, GroupLetter, int>> edgeSet;
  for (int s = 0; s < n; ++s)
    for (int q : closure[s])
      for (const auto& tr : transitions_)
        if (tr.letter != 0 && tr.from == q)
          edgeSet.insert({s, tr.letter, tr.to});
  std::set<int> accept(accepting_.begin(), accepting_.end());
  std::set<int> newAccept;
  for (int s = 0; s < n; ++s)
    for (int q : closure[s])
      if (accept.count(q)) newAccept.insert(s);

  // Keep only useful states: reachable from an initial state and able to
  // reach an accepting one.
  std::vector<std::set<int>> fwd(n), bwd(n);
  for (const auto& [f, l, t] : edgeSet) {
    fwd[f].insert(t);
    bwd[t].insert(f);
  }
  auto reach = [&](const std::vector<int>& seeds,
                   const std::vector<std::set<int>>& adj) {
    std::set<int> seen(seeds.begin(), seeds.end());
    std::vector<int> stack(seeds.begin(), seeds.end());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    return seen;
  };
  std::set<int> fromInit = reach(initial_, fwd);
  std::set<int> toAccept =
      reach({newAccept.begin(), newAccept.end()}, bwd);
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s)
    if (fromInit.count(s) && toAccept.count(s)) remap[s] = next++;

  std::vector<Transition> ts;
  for (const auto& [f, l, t] : edgeSet)
    if (remap[f] >= 0 && remap[t] >= 0) ts.push_back({remap[f], remap[t], l});
  std::vector<int> init, acc;
  for (int s : std::set<int>(initial_.begin(), initial_.end()))
    if (remap[s] >= 0) init.push_back(remap[s]);
  for (int s : newAccept)
    if (remap[s] >= 0) acc.push_back(remap[s]);

  if (next == 0) {  // empty language
    states_ = 1;
    transitions_.clear();
    initial_ = {0};
    accepting_.clear();
    return;
  }
  states_ = next;
  transitions_ = std::move(ts);
  std::sort(transitions_.begin(), transitions_.end(),
            [](const Transition& a, const Transition& b) {
              return std::tie(a.from, a.letter, a.to) <
                     std::tie(b.from, b.letter, b.to);
            });
  initial_ = std::move(init);
  accepting_ = std::move(acc);
}

bool GroupNfa::accepts(const GroupWord& w) const {
  std::set<int> cur(initial_.begin(), initial_.end());
  for (GroupLetter l : w) {
    std::set<int> nxt;
    for (const auto& tr : transitions_)
      if (tr.letter == l && cur.count(tr.from)) nxt.insert(tr.to);
    cur = std::move(nxt);
    if (cur.empty()) return false;
  }
  for (int s : accepting_)
    if (cur.count(s)) return true;
  return false;
}

GroupNfa unionNfa(const GroupNfa& a, const GroupNfa& b) {
  checkSameRank(a, b);
  int off = a.stateCount();
  std::vector<GroupNfa::Transition> ts = a.transitions();
  for (const auto& tr : b.transitions())
    ts.push_back({tr.from + off, tr.to + off, tr.letter});
  std::vector<int> init = a.initialStates(), acc = a.acceptingStates();
  for (int s : b.initialStates()) init.push_back(s + off);
  for (int s : b.acceptingStates()) acc.push_back(s + off);
  return {a.alphabetRank(), off + b.stateCount(), std::move(ts),
          std::move(init), std::move(acc)};
}

GroupNfa concatNfa(const GroupNfa& a, const GroupNfa& b) {
  checkSameRank(a, b);
  int off = a.stateCount();
  std::vector<GroupNfa::Transition> ts = a.transitions();
  for (const auto& tr : b.transitions())
    ts.push_back({tr.from + off, tr.to + off, tr.letter});
  for (int f : a.acceptingStates())
    for (int i : b.initialStates()) ts.push_back({f, i + off, 0});
  std::vector<int> acc;
  for (int s : b.acceptingStates()) acc.push_back(s + off);
  return {a.alphabetRank(), off + b.stateCount(), std::move(ts),
          a.initialStates(), std::move(acc)};
}

GroupNfa plusNfa(const GroupNfa& a) {
  std::vector<GroupNfa::Transition> ts = a.transitions();
  for (int f : a.acceptingStates())
    for (int i : a.initialStates()) ts.push_back({f, i, 0});
  return {a.alphabetRank(), a.stateCount(), std::move(ts), a.initialStates(),
          a.acceptingStates()};
}

GroupNfa inversionNfa(const GroupNfa& a) {
  std::vector<GroupNfa::Transition> ts;
  for (const auto& tr : a.transitions())
    ts.push_back({tr.to, tr.from, -tr.letter});
  return {a.alphabetRank(), a.stateCount(), std::move(ts),
          a.acceptingStates(), a.initialStates()};
}

GroupNfa applyAutomorphismNfa(const GroupNfa& a, const Automorphism& phi,
                              int e) {
  const int rank = a.alphabetRank();
  std::vector<GroupNfa::Transition> ts;
  int states = a.stateCount();
  for (const auto& tr : a.transitions()) {
    if (std::abs(tr.letter) == rank + 1 || tr.letter == 0) {
      ts.push_back(tr);
      continue;
    }
    Word image = phi.applyPower(Word::generator(std::abs(tr.letter) - 1), e);
    if (tr.letter < 0) image = invert(image);
    if (image.empty()) {
      ts.push_back({tr.from, tr.to, 0});
      continue;
    }
    int cur = tr.from;
    for (int i = 0; i < image.size(); ++i) {
      int nxt = (i + 1 == image.size()) ? tr.to : states++;
      ts.push_back({cur, nxt, image.letter(i)});
      cur = nxt;
    }
  }
  return {rank, states, std::move(ts), a.initialStates(),
          a.acceptingStates()};
}

std::vector<GroupWord> enumerateNfa(const GroupNfa& a, int maxlen) {
  std::vector<GroupWord> out;
  std::set<int> accept(a.acceptingStates().begin(),
                       a.acceptingStates().end());
  // letter -> targets per state, in canonical letter order
  const int rank = a.alphabetRank();
  std::map<int, std::map<GroupLetter, std::set<int>>> moves;
  for (const auto& tr : a.transitions())
    moves[tr.from][tr.letter].insert(tr.to);

  GroupWord word;
  auto rec = [&](auto&& self, const std::set<int>& states) -> void {
    for (int s : states)
      if (accept.count(s)) {
        out.push_back(word);
        break;
      }
    if (static_cast<int>(word.size()) >= maxlen) return;
    std::set<GroupLetter> letters;
    for (int s : states) {
      auto it = moves.find(s);
      if (it == moves.end()) continue;
      for (const auto& [l, _] : it->second) letters.insert(l);
    }
    std::vector<GroupLetter> sorted(letters.begin(), letters.end());
    std::sort(sorted.begin(), sorted.end(), [&](GroupLetter x, GroupLetter y) {
      return groupLetterKey(rank, x) < groupLetterKey(rank, y);
    });
    for (GroupLetter l : sorted) {
      std::set<int> nxt;
      for (int s : states) {
        auto it = moves.find(s);
        if (it == moves.end()) continue;
        auto jt = it->second.find(l);
        if (jt == it->second.end()) continue;
        nxt.insert(jt->second.begin(), jt->second.end());
      }
      if (nxt.empty()) continue;
      word.push_back(l);
      self(self, nxt);
      word.pop_back();
    }
  };
  rec(rec, std::set<int>(a.initialStates().begin(), a.initialStates().end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const GroupWord& x, const GroupWord& y) {
                     return x.size() < y.size();
                   });
  return out;
}

FbcElement evaluateGroupWord(const GroupPresentation& pres,
                             const GroupWord& w) {
  const int rank = pres.rank();
  FbcElement acc = fbcIdentity(pres);
  for (GroupLetter l : w) {
    FbcElement step =
        std::abs(l) == rank + 1
            ? fbcElement(pres, l > 0 ? 1 : -1, Word())
            : fbcElement(pres, 0, Word::generator(std::abs(l) - 1, l > 0 ? 1 : -1));
    acc = fbcMul(acc, step);
  }
  return acc;
}

GroupNfa subgroupNfa(const SubgroupGraph& graph) {
  std::vector<GroupNfa::Transition> ts;
  for (const auto& e : graph.edges()) {
    ts.push_back({e.src, e.dst, e.gen + 1});
    ts.push_back({e.dst, e.src, -(e.gen + 1)});
  }
  return {graph.alphabetRank(), std::max(1, graph.vertexCount()),
          std::move(ts), {graph.baseVertex()}, {graph.baseVertex()}};
}

namespace {

GroupWord elementGroupWord(const FbcElement& g) {
  GroupWord w;
  const int rank = g.pres.rank();
  for (int i = 0; i < std::abs(g.t); ++i)
    w.push_back(g.t > 0 ? rank + 1 : -(rank + 1));
  for (Letter l : g.u.letters()) w.push_back(l);
  return w;
}

GroupWord inverseGroupWord(const GroupWord& w) {
  GroupWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

}  // namespace

GroupNfa buildCentralizerNfa(const CentralizerResult& C,
                             const Automorphism& phi) {
  const int rank = phi.rank();
  if (C.input.t == 0) {
    // Loop automaton over the generator elements and their inverses.
    std::vector<GroupNfa::Transition> ts;
    int states = 1;
    auto addLoop = [&](const GroupWord& w) {
      int cur = 0;
      for (size_t i = 0; i < w.size(); ++i) {
        int nxt = (i + 1 == w.size()) ? 0 : states++;
        ts.push_back({cur, nxt, w[i]});
        cur = nxt;
      }
    };
    for (const auto& gen : C.generators) {
      GroupWord w = elementGroupWord(gen);
      if (w.empty()) continue;
      addLoop(w);
      addLoop(inverseGroupWord(w));
    }
    return {rank, states, std::move(ts), {0}, {0}};
  }

  if (!C.torusGenerator)
    throw MissingWitness(
        "centralizer automaton for a != 0 needs the vertical generator");
  const int ea = C.torusGenerator->t;
  const Word& z = C.torusGenerator->u;

  GroupNfa c0 = subgroupNfa(C.c0);
  GroupWord zWord(z.letters().begin(), z.letters().end());
  GroupWord tWord;
  for (int i = 0; i < std::abs(ea); ++i)
    tWord.push_back(ea > 0 ? rank + 1 : -(rank + 1));

  GroupNfa cea = concatNfa(applyAutomorphismNfa(c0, phi, ea),
                           GroupNfa::singleWord(rank, zWord));
  GroupNfa s = concatNfa(plusNfa(concatNfa(cea, GroupNfa::singleWord(rank, tWord))),
                         cea);
  return unionNfa(unionNfa(inversionNfa(s), c0), s);
}

GroupNfa parseNfa(const Alphabet& alphabet, std::istream& in) {
  int states = -1;
  std::vector<int> initial, accepting;
  std::vector<GroupNfa::Transition> ts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = splitTokens(line);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("automaton line " + std::to_string(lineno) + ": " + msg);
    };
    if (toks[0] == "states") {
      if (toks.size() != 2) fail("expected `states n`");
      states = std::atoi(toks[1].c_str());
    } else if (toks[0] == "initial" || toks[0] == "accept") {
      auto& v = toks[0] == "initial" ? initial : accepting;
      for (size_t i = 1; i < toks.size(); ++i)
        v.push_back(std::atoi(toks[i].c_str()));
    } else if (toks[0] == "edge") {
      if (toks.size() != 4) fail("expected `edge p q letter`");
      ts.push_back({std::atoi(toks[1].c_str()), std::atoi(toks[2].c_str()),
                    parseGroupLetter(alphabet, toks[3])});
    } else {
      fail("unrecognized directive '" + toks[0] + "'");
    }
  }
  if (states < 0) throw ParseError("automaton missing `states n`");
  return {alphabet.rank(), states, std::move(ts), std::move(initial),
          std::move(accepting)};
}

std::string formatNfa(const Alphabet& alphabet, const GroupNfa& a) {
  std::ostringstream os;
  os << "states " << a.stateCount() << '\n';
  os << "initial";
  for (int s : a.initialStates()) os << ' ' << s;
  os << '\n' << "accept";
  for (int s : a.acceptingStates()) os << ' ' << s;
  os << '\n';
  for (const auto& tr : a.transitions())
    os << "edge " << tr.from << ' ' << tr.to << ' '
       << formatGroupLetter(alphabet, tr.letter) << '\n';
  return os.str();
}

std::string formatGroupWord(const Alphabet& alphabet, const GroupWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << formatGroupLetter(alphabet, w[i]);
  }
  return os.str();
}

}  // namespace fbc
