#include "fbc/stallings.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "fbc/errors.hpp"

namespace fbc {

namespace {

// Reduced words over provenance symbols +-(j+1).
using Sym = std::vector<int>;

void spush(Sym& out, int s) {
  if (!out.empty() && out.back() == -s)
    out.pop_back();
  else
    out.push_back(s);
}

Sym sconcat(const Sym& a, const Sym& b) {
  Sym out = a;
  for (int s : b) spush(out, s);
  return out;
}

Sym sinv(const Sym& a) {
  Sym out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
  return out;
}

struct BEdge {
  int src;
  int dst;
  int gen;  // 0-based positive generator
  Sym ann;  // contribution of the forward (src -> dst) traversal
  bool alive = true;
};

struct Traversal {
  Letter code;  // +-(gen+1)
  int to;
  int edge;
  bool forward;
};

}  // namespace

SubgroupGraph SubgroupGraph::build(int rank, std::vector<Word> generators) {
  SubgroupGraph g;
  g.rank_ = rank;
  g.gens_ = std::move(generators);

  std::vector<BEdge> edges;
  int base = 0;
  int vertexCount = 1;

  for (size_t j = 0; j < g.gens_.size(); ++j) {
    const auto& ls = g.gens_[j].letters();
    if (ls.empty()) continue;
    int cur = base;
    for (size_t i = 0; i < ls.size(); ++i) {
      int nxt = (i + 1 == ls.size()) ? base : vertexCount++;
      Sym contribution;
      if (i == 0) contribution.push_back(static_cast<int>(j) + 1);
      Letter l = ls[i];
      if (l > 0)
        edges.push_back({cur, nxt, l - 1, contribution});
      else
        edges.push_back({nxt, cur, -l - 1, sinv(contribution)});
      cur = nxt;
    }
  }

  auto contributionOf = [&](const Traversal& t) -> Sym {
    return t.forward ? edges[t.edge].ann : sinv(edges[t.edge].ann);
  };

  // Fold until no vertex has two identically labeled traversals.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < vertexCount && !changed; ++v) {
      std::vector<Traversal> ts;
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (!edges[e].alive) continue;
        if (edges[e].src == v)
          ts.push_back({edges[e].gen + 1, edges[e].dst, e, true});
        if (edges[e].dst == v)
          ts.push_back({-(edges[e].gen + 1), edges[e].src, e, false});
      }
      std::sort(ts.begin(), ts.end(), [](const Traversal& a, const Traversal& b) {
        return std::tie(a.code, a.edge, a.forward) <
               std::tie(b.code, b.edge, b.forward);
      });
      for (size_t i = 0; i + 1 < ts.size(); ++i) {
        const Traversal& t1 = ts[i];
        const Traversal& t2 = ts[i + 1];
        if (t1.code != t2.code) continue;
        changed = true;
        if (t1.to == t2.to) {
          edges[t2.edge].alive = false;  // parallel duplicate
          break;
        }
        // The base must always be the kept endpoint: its provenance frame
        // is the identity, and express() relies on that. Otherwise keep the
        // lowest id for determinism.
        Traversal tkeep = t1, tdel = t2;
        if (t2.to == base || (t1.to != base && t2.to < t1.to))
          std::swap(tkeep, tdel);
        int keep = tkeep.to, del = tdel.to;
        Sym delta = sconcat(sinv(contributionOf(tkeep)), contributionOf(tdel));
        Sym deltaInv = sinv(delta);
        edges[tdel.edge].alive = false;
        for (auto& e : edges) {
          if (!e.alive) continue;
          bool s = e.src == del, d = e.dst == del;
          if (s && d)
            e.ann = sconcat(sconcat(delta, e.ann), deltaInv);
          else if (s)
            e.ann = sconcat(delta, e.ann);
          else if (d)
            e.ann = sconcat(e.ann, deltaInv);
          if (s) e.src = keep;
          if (d) e.dst = keep;
        }
        break;
      }
    }
  }

  // Trim dead hairs (degree-1 vertices other than the base).
  changed = true;
  while (changed) {
    changed = false;
    std::vector<int> degree(vertexCount, 0);
    for (const auto& e : edges)
      if (e.alive) {
        degree[e.src]++;
        degree[e.dst]++;
      }
    for (auto& e : edges) {
      if (!e.alive) continue;
      int hair = -1;
      if (e.src != base && degree[e.src] == 1) hair = e.src;
      if (e.dst != base && degree[e.dst] == 1) hair = e.dst;
      if (hair >= 0) {
        e.alive = false;
        changed = true;
      }
    }
  }

  // Compact: BFS renumbering from the base, deterministic traversal order.
  std::vector<std::map<Letter, std::pair<int, Sym>>> adj(vertexCount);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (!edges[e].alive) continue;
    const auto& ed = edges[e];
    adj[ed.src][ed.gen + 1] = {ed.dst, ed.ann};
    adj[ed.dst][-(ed.gen + 1)] = {ed.src, sinv(ed.ann)};
  }
  std::vector<int> remap(vertexCount, -1);
  std::deque<int> queue{base};
  remap[base] = 0;
  int nextId = 1;
  std::vector<int> order{base};
  auto codeKey = [&](Letter c) { return letterKey(rank, c); };
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    std::vector<Letter> codes;
    for (const auto& [c, _] : adj[v]) codes.push_back(c);
    std::sort(codes.begin(), codes.end(),
              [&](Letter a, Letter b) { return codeKey(a) < codeKey(b); });
    for (Letter c : codes) {
      int w = adj[v][c].first;
      if (remap[w] == -1) {
        remap[w] = nextId++;
        order.push_back(w);
        queue.push_back(w);
      }
    }
  }

  g.next_.assign(nextId, {});
  g.contrib_.assign(nextId, {});
  for (int v : order) {
    for (const auto& [c, target] : adj[v]) {
      g.next_[remap[v]][c] = remap[target.first];
      g.contrib_[remap[v]][c] = target.second;
    }
  }
  return g;
}

std::vector<SubgroupGraph::Edge> SubgroupGraph::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < vertexCount(); ++v)
    for (const auto& [c, w] : next_[v])
      if (c > 0) out.push_back({v, c - 1, w});
  return out;
}

bool SubgroupGraph::contains(const Word& w) const {
  int v = 0;
  for (Letter l : w.letters()) {
    auto it = next_[v].find(l);
    if (it == next_[v].end()) return false;
    v = it->second;
  }
  return v == 0;
}

std::optional<std::vector<int>> SubgroupGraph::express(const Word& w) const {
  int v = 0;
  std::vector<int> acc;
  for (Letter l : w.letters()) {
    auto it = next_[v].find(l);
    if (it == next_[v].end()) return std::nullopt;
    for (int s : contrib_[v].at(l)) spush(acc, s);
    v = it->second;
  }
  if (v != 0) return std::nullopt;
  return acc;
}

std::vector<int> SubgroupGraph::expressChecked(const Word& w) const {
  auto e = express(w);
  if (!e) throw NotAMember("word is not a member of the subgroup");
  return *e;
}

Word SubgroupGraph::evaluateExpression(std::span<const int> symbols) const {
  WordBuilder b;
  for (int s : symbols) {
    if (s > 0)
      b.pushWord(gens_.at(s - 1));
    else
      b.pushInverse(gens_.at(-s - 1));
  }
  return b.take();
}

std::vector<Word> SubgroupGraph::basis() const {
  // BFS spanning tree with path words, then one word per non-tree edge.
  std::vector<std::optional<Word>> path(vertexCount());
  path[0] = Word();
  std::deque<int> queue{0};
  std::set<std::tuple<int, int, int>> tree;  // (src, gen, dst), positive form
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    std::vector<Letter> codes;
    for (const auto& [c, _] : next_[v]) codes.push_back(c);
    std::sort(codes.begin(), codes.end(), [&](Letter a, Letter b) {
      return letterKey(rank_, a) < letterKey(rank_, b);
    });
    for (Letter c : codes) {
      int w = next_[v].at(c);
      if (path[w]) continue;
      WordBuilder b;
      b.pushWord(*path[v]);
      b.push(c);
      path[w] = b.take();
      tree.insert(c > 0 ? std::make_tuple(v, c - 1, w)
                        : std::make_tuple(w, -c - 1, v));
      queue.push_back(w);
    }
  }
  std::vector<Word> out;
  for (const auto& e : edges()) {
    if (tree.count({e.src, e.gen, e.dst})) continue;
    WordBuilder b;
    b.pushWord(*path[e.src]);
    b.push(e.gen + 1);
    b.pushInverse(*path[e.dst]);
    out.push_back(b.take());
  }
  return out;
}

std::string SubgroupGraph::canonicalSignature() const {
  // Vertices are already BFS-canonically numbered by build().
  std::ostringstream os;
  os << vertexCount() << ';';
  for (int v = 0; v < vertexCount(); ++v)
    for (const auto& [c, w] : next_[v])
      if (c > 0) os << v << ',' << c << ',' << w << ';';
  return os.str();
}

std::string SubgroupGraph::toDot(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "digraph subgroup {\n  rankdir=LR;\n  0 [shape=doublecircle];\n";
  for (const auto& e : edges())
    os << "  " << e.src << " -> " << e.dst << " [label=\""
       << alphabet.name(e.gen) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace fbc
