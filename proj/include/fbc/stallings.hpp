#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbc/word.hpp"

namespace fbc {

// Folded Stallings graph of a finitely generated subgroup of F_n.
// Vertex 0 is the base; loops at the base spell exactly the subgroup.
// Each positive-letter edge carries a provenance word over the generators
// the graph was built from, so members can be expressed in those generators.
class SubgroupGraph {
 public:
  struct Edge {
    int src;
    int gen;  // positive generator index, 0-based
    int dst;
  };

  static SubgroupGraph build(int rank, std::vector<Word> generators);

  int alphabetRank() const { return rank_; }
  int baseVertex() const { return 0; }
  int vertexCount() const { return static_cast<int>(next_.size()); }
  std::vector<Edge> edges() const;

  bool contains(const Word& w) const;

  // One basis word per non-tree edge of a BFS spanning tree.
  std::vector<Word> basis() const;

  // Expression of w over the build generators: symbols +-(j+1) refer to
  // generators()[j]. Nullopt when w is not a member.
  std::optional<std::vector<int>> express(const Word& w) const;
  // Same, but throws NotAMember.
  std::vector<int> expressChecked(const Word& w) const;

  // Substitute generators()[j] for symbol j+1 and reduce.
  Word evaluateExpression(std::span<const int> symbols) const;

  const std::vector<Word>& generators() const { return gens_; }

  // Label-preserving based-isomorphism invariant (BFS canonical form).
  std::string canonicalSignature() const;

  std::string toDot(const Alphabet& alphabet) const;

 private:
  int rank_ = 0;
  std::vector<Word> gens_;
  // next_[v] maps letter code (+-(g+1)) to the target vertex.
  std::vector<std::map<Letter, int>> next_;
  // contrib_[v][code]: provenance contribution of that traversal, a reduced
  // word over symbols +-(j+1) for gens_[j].
  std::vector<std::map<Letter, std::vector<int>>> contrib_;
};

}  // namespace fbc
