#include "fbc/twisted.hpp"

#include <algorithm>
#include <cmath>

#include "fbc/errors.hpp"

namespace fbc {

namespace {
constexpr long long kBallHardCap = 4'000'000;

long long ballSize(int rank, int maxLen) {
  long long total = 1, layer = 1;
  for (int l = 1; l <= maxLen; ++l) {
    layer *= (l == 1) ? 2 * rank : 2 * rank - 1;
    total += layer;
    if (total > kBallHardCap) return total;
  }
  return total;
}
}  // namespace

std::vector<Word> reducedWordsUpTo(int rank, int maxLen) {
  if (ballSize(rank, maxLen) > kBallHardCap)
    throw BudgetTooLarge("reduced-word ball exceeds the hard cap");
  // Letters in canonical order: positives ascending, then inverses.
  std::vector<Letter> order;
  for (int i = 0; i < rank; ++i) order.push_back(i + 1);
  for (int i = 0; i < rank; ++i) order.push_back(-(i + 1));

  std::vector<Word> out{Word()};
  size_t layerBegin = 0;
  for (int len = 1; len <= maxLen; ++len) {
    size_t layerEnd = out.size();
    for (size_t i = layerBegin; i < layerEnd; ++i) {
      for (Letter l : order) {
        const auto& w = out[i];
        if (!w.empty() && w.letters().back() == -l) continue;
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        out.push_back(Word::fromLetters(ls));
      }
    }
    layerBegin = layerEnd;
  }
  return out;
}

bool verifyWitness(const TwistedWitness& w) {
  const auto& ctx = w.ctx;
  Word lhs = mul(ctx.phi.applyPower(invert(w.z), ctx.a),
                 ctx.phi.applyPower(ctx.x, w.k), w.z);
  return lhs == ctx.x;
}

Decision<Word> twistedConjugator(const Word& x, const Word& y,
                                 const Automorphism& psi, int radius) {
  if (psi.isIdentity()) {
    auto z = conjugacyWitness(psi.rank(), x, y);
    if (z) return Decision<Word>::yes(*z);
    return Decision<Word>::no();
  }
  for (const Word& z : reducedWordsUpTo(psi.rank(), radius)) {
    if (mul(psi.apply(invert(z)), y, z) == x) return Decision<Word>::yes(z);
  }
  return Decision<Word>::unknown();
}

namespace {
void checkContext(const TwistedWitness& a, const TwistedWitness& b) {
  if (!a.ctx.sameAs(b.ctx))
    throw ContextMismatch("witnesses from different twisted contexts");
}

TwistedWitness checkedResult(TwistedWitness w, const char* op) {
  if (!verifyWitness(w))
    throw InvalidWitness(std::string("derived witness fails verification in ") +
                         op);
  return w;
}
}  // namespace

TwistedWitness combineWitnesses(const TwistedWitness& w1,
                                const TwistedWitness& w2) {
  checkContext(w1, w2);
  // (y phi^{k2}) z realizes k1 + k2 when y realizes k1 and z realizes k2.
  Word z = mul(w1.ctx.phi.applyPower(w1.z, w2.k), w2.z);
  return checkedResult({w1.k + w2.k, std::move(z), w1.ctx}, "combine");
}

TwistedWitness negateWitness(const TwistedWitness& w) {
  // z realizes k  =>  (z^-1) phi^{-k} realizes -k.
  Word z = w.ctx.phi.applyPower(invert(w.z), -w.k);
  return checkedResult({-w.k, std::move(z), w.ctx}, "negate");
}

TwistedWitness shiftCosetWitness(const TwistedWitness& y,
                                 const TwistedWitness& z) {
  checkContext(y, z);
  if (z.k == 0 || (y.k != 0 && y.k % z.k != 0))
    throw InvalidWitness("shift expects witnesses for k*e_a and e_a");
  if (!verifyWitness(y) || !verifyWitness(z))
    throw InvalidWitness("shift inputs must verify");
  Word el = mul(y.ctx.phi.applyPower(y.z, z.k), z.z);
  return checkedResult({y.k + z.k, std::move(el), y.ctx}, "shift");
}

namespace {
std::vector<int> positiveDivisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}
}  // namespace

EaStatus computeEa(const Word& x, const Automorphism& phi, int a,
                   const SearchBudget& budget) {
  if (a == 0) throw Error("computeEa requires a != 0");
  TwistedContext ctx{x, a, phi};
  Automorphism phiA = phi.toPower(a);
  EaStatus status;
  for (int d : positiveDivisors(std::abs(a))) {
    auto dec = twistedConjugator(x, phi.applyPower(x, d), phiA, budget.radius);
    if (dec.isYes()) {
      status.ea = d;
      status.witness = TwistedWitness{d, *dec.certificate, ctx};
      return status;
    }
    if (d == std::abs(a)) {
      // Guaranteed witness: z = x realizes k = a; negate for a < 0.
      TwistedWitness fallback{a, x, ctx};
      if (a < 0) fallback = negateWitness(fallback);
      status.ea = d;
      status.witness = checkedResult(fallback, "computeEa fallback");
      return status;
    }
    if (dec.isUnknown()) status.unresolvedDivisors.push_back(d);
  }
  return status;  // unreachable: the d = |a| branch always returns
}

TwistedCentralizerResult twistedCentralizer(const Word& x,
                                            const Automorphism& phi, int a,
                                            const SearchBudget& budget) {
  const int rank = phi.rank();
  auto fixedBy = [&](const Word& y) {
    return mul(invert(x), phi.applyPower(y, a), x) == y;
  };
  std::vector<Word> fixed;
  for (const Word& y : reducedWordsUpTo(rank, budget.radius))
    if (!y.empty() && fixedBy(y)) fixed.push_back(y);
  SubgroupGraph graph = SubgroupGraph::build(rank, fixed);

  bool stabilized = true;
  for (const Word& y : reducedWordsUpTo(rank, budget.radius + 1)) {
    if (y.size() <= budget.radius) continue;
    if (fixedBy(y) && !graph.contains(y)) {
      stabilized = false;
      break;
    }
  }
  return {std::move(graph), stabilized};
}

}  // namespace fbc
