#pragma once

#include <optional>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/decision.hpp"
#include "fbc/stallings.hpp"
#include "fbc/word.hpp"

namespace fbc {

// All reduced words of length <= maxLen, ordered by length then by the
// canonical letter order (positives before inverses). Deterministic.
std::vector<Word> reducedWordsUpTo(int rank, int maxLen);

struct TwistedContext {
  Word x;
  int a = 0;
  Automorphism phi;

  bool sameAs(const TwistedContext& o) const {
    return x == o.x && a == o.a && phi == o.phi;
  }
};

// z realizing k in E_{a,x,phi}: x = (z^-1 phi^a)(x phi^k) z.
struct TwistedWitness {
  int k = 0;
  Word z;
  TwistedContext ctx;
};

bool verifyWitness(const TwistedWitness& w);

// Bounded search for z with x = (z^-1 psi) y z. Identity twisting delegates
// to the exact free-group conjugacy check and may return No; otherwise the
// search is breadth-first by word length and returns Unknown on exhaustion.
Decision<Word> twistedConjugator(const Word& x, const Word& y,
                                 const Automorphism& psi, int radius);

// Witness algebra from the closure proof: outputs are verified, with
// InvalidWitness thrown if verification fails.
TwistedWitness combineWitnesses(const TwistedWitness& w1,
                                const TwistedWitness& w2);
TwistedWitness negateWitness(const TwistedWitness& w);
TwistedWitness shiftCosetWitness(const TwistedWitness& y,
                                 const TwistedWitness& z);

struct EaStatus {
  std::optional<int> ea;
  std::optional<TwistedWitness> witness;
  std::vector<int> unresolvedDivisors;  // smaller divisors that came back Unknown
};

// Minimal positive element of E_{a,x,phi} among the divisors of |a|; the
// d = |a| test always succeeds (constructed fallback witness).
EaStatus computeEa(const Word& x, const Automorphism& phi, int a,
                   const SearchBudget& budget);

struct TwistedCentralizerResult {
  SubgroupGraph graph;  // generated by verified fixed elements of the ball
  bool stabilized;      // one extra enumeration round added nothing new
};

// C_{0,a,x,phi} as the fixed subgroup of y -> x^-1 (y phi^a) x, approximated
// from below by a bounded ball scan. Sound always; completeness is budget-
// limited and reported through `stabilized`.
TwistedCentralizerResult twistedCentralizer(const Word& x,
                                            const Automorphism& phi, int a,
                                            const SearchBudget& budget);

}  // namespace fbc
