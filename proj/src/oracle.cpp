#include "fbc/oracle.hpp"

#include <algorithm>

#include "fbc/errors.hpp"

namespace fbc {

namespace {

bool elementLess(const FbcElement& a, const FbcElement& b) {
  int aa = std::abs(a.t), ab = std::abs(b.t);
  if (aa != ab) return aa < ab;
  if (a.t != b.t) return a.t < b.t;
  return a.u < b.u;
}

void checkCap(long long count, long long hardCap) {
  if (count > hardCap)
    throw BudgetTooLarge("oracle ball of " + std::to_string(count) +
                         " elements exceeds the hard cap of " +
                         std::to_string(hardCap));
}

}  // namespace

long long reducedWordCount(int rank, int maxLen) {
  long long total = 1, layer = 1;
  for (int l = 1; l <= maxLen; ++l) {
    layer *= (l == 1) ? 2 * rank : 2 * rank - 1;
    total += layer;
  }
  return total;
}

Ball ball(const GroupPresentation& pres, int maxT, int maxLen,
          long long hardCap) {
  checkCap((2LL * maxT + 1) * reducedWordCount(pres.rank(), maxLen), hardCap);
  Ball out{maxT, maxLen, {}};
  std::vector<Word> words = reducedWordsUpTo(pres.rank(), maxLen);
  for (int b = -maxT; b <= maxT; ++b)
    for (const Word& y : words)
      out.elements.push_back(fbcElement(pres, b, y));
  std::sort(out.elements.begin(), out.elements.end(), elementLess);
  return out;
}

std::vector<FbcElement> bruteCentralizer(const FbcElement& g, int maxT,
                                         int maxLen, long long hardCap) {
  std::vector<FbcElement> out;
  for (const FbcElement& h : ball(g.pres, maxT, maxLen, hardCap).elements)
    if (fbcCommute(g, h)) out.push_back(h);
  return out;
}

std::vector<Word> bruteTwistedClass(const Word& x, const Automorphism& psi,
                                    int maxLen, long long hardCap) {
  checkCap(reducedWordCount(psi.rank(), maxLen), hardCap);
  std::vector<Word> out;
  for (const Word& z : reducedWordsUpTo(psi.rank(), maxLen))
    out.push_back(mul(psi.apply(z), x, invert(z)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> bruteEa(const Word& x, const Automorphism& phi, int a,
                         int kmax, int maxLen, long long hardCap) {
  checkCap((2LL * kmax + 1) * reducedWordCount(phi.rank(), maxLen), hardCap);
  std::vector<Word> zs = reducedWordsUpTo(phi.rank(), maxLen);
  std::vector<int> out;
  TwistedContext ctx{x, a, phi};
  for (int k = -kmax; k <= kmax; ++k)
    for (const Word& z : zs)
      if (verifyWitness({k, z, ctx})) {
        out.push_back(k);
        break;
      }
  return out;
}

}  // namespace fbc
