#pragma once

#include <vector>

#include "fbc/element.hpp"
#include "fbc/twisted.hpp"

namespace fbc {

// Brute-force ground truth at desk scale. Everything here is exhaustive and
// exact within the stated bounds, and deliberately independent of the main
// algorithms.

inline constexpr long long kOracleHardCap = 1'000'000;

// Number of reduced words of length <= maxLen in F_rank:
// 1 + 2n + 2n(2n-1) + ... (closed-form layer recursion).
long long reducedWordCount(int rank, int maxLen);

struct Ball {
  int maxT = 0;        // A: max |t-exponent|
  int maxLen = 0;      // L: max |u|
  std::vector<FbcElement> elements;  // canonical order: (|b|, b, |u|, lex)
};

Ball ball(const GroupPresentation& pres, int maxT, int maxLen,
          long long hardCap = kOracleHardCap);

// All ball elements commuting with g.
std::vector<FbcElement> bruteCentralizer(const FbcElement& g, int maxT,
                                         int maxLen,
                                         long long hardCap = kOracleHardCap);

// The psi-twisted conjugates (z psi) x z^-1 over all |z| <= maxLen,
// deduplicated and sorted.
std::vector<Word> bruteTwistedClass(const Word& x, const Automorphism& psi,
                                    int maxLen,
                                    long long hardCap = kOracleHardCap);

// All k in [-kmax, kmax] realized by some witness z with |z| <= maxLen.
std::vector<int> bruteEa(const Word& x, const Automorphism& phi, int a,
                         int kmax, int maxLen,
                         long long hardCap = kOracleHardCap);

}  // namespace fbc
