#include "fbc/centralizer.hpp"

#include <cstdlib>

#include "fbc/brinkmann.hpp"
#include "fbc/errors.hpp"
#include "fbc/twisted.hpp"

namespace fbc {

namespace {

FbcElement horizontal(const GroupPresentation& pres, Word w) {
  return fbcElement(pres, 0, std::move(w));
}

void checkGenerators(const CentralizerResult& result) {
  for (const auto& gen : result.generators)
    if (!fbcCommute(gen, result.input))
      throw Error("centralizer postcondition violated: generator does not "
                  "commute with the input");
}

}  // namespace

CentralizerResult centralize(const FbcElement& g, const SearchBudget& budget) {
  const GroupPresentation& pres = g.pres;
  const Automorphism& phi = pres.phi();
  const int rank = pres.rank();
  const int a = g.t;
  const Word& x = g.u;

  CentralizerResult result{g,
                           {},
                           SubgroupGraph::build(rank, {}),
                           std::nullopt,
                           CentralizerStatus::Exact,
                           ""};

  if (a == 0 && x.empty()) {
    // The identity: the centralizer is the whole group.
    std::vector<Word> all;
    for (int i = 0; i < rank; ++i) all.push_back(Word::generator(i));
    result.c0 = SubgroupGraph::build(rank, all);
    result.torusGenerator = fbcElement(pres, 1, Word());
    result.generators.push_back(*result.torusGenerator);
    for (int i = 0; i < rank; ++i)
      result.generators.push_back(horizontal(pres, Word::generator(i)));
    checkGenerators(result);
    return result;
  }

  if (a == 0) {
    Word u = freeCentralizer(rank, x);
    result.c0 = SubgroupGraph::build(rank, {u});
    auto period = findPeriod(x, phi, budget.kmax);
    if (period.isYes()) {
      result.torusGenerator =
          fbcElement(pres, period.certificate->e0, period.certificate->z);
      result.generators.push_back(*result.torusGenerator);
    } else {
      result.status = CentralizerStatus::BudgetLimited;
      result.report = "no period k <= kmax found; a vertical generator may "
                      "exist beyond the budget";
    }
    result.generators.push_back(horizontal(pres, u));
    checkGenerators(result);
    return result;
  }

  // a != 0: e_a plus one coset witness, and the twisted centralizer C_0.
  EaStatus ea = computeEa(x, phi, a, budget);
  TwistedCentralizerResult c0 = twistedCentralizer(x, phi, a, budget);
  result.c0 = std::move(c0.graph);
  for (const Word& b : result.c0.basis())
    result.generators.push_back(horizontal(pres, b));
  result.torusGenerator = fbcElement(pres, *ea.ea, ea.witness->z);
  result.generators.push_back(*result.torusGenerator);
  if (!ea.unresolvedDivisors.empty() || !c0.stabilized) {
    result.status = CentralizerStatus::BudgetLimited;
    result.report = !ea.unresolvedDivisors.empty()
                        ? "some divisors of |a| stayed unresolved; e_a may be "
                          "smaller than reported"
                        : "fixed-subgroup closure did not stabilize within "
                          "the budget";
  }
  checkGenerators(result);
  return result;
}

Decision<Word> centralizerMember(const CentralizerResult& C,
                                 const FbcElement& h) {
  const bool limited = C.status == CentralizerStatus::BudgetLimited;
  auto negative = [&] {
    return limited ? Decision<Word>::unknown() : Decision<Word>::no();
  };
  if (C.torusGenerator) {
    const int e = C.torusGenerator->t;
    if (h.t % e != 0) return negative();
    FbcElement peeled = fbcMul(fbcPow(*C.torusGenerator, -h.t / e), h);
    if (peeled.t != 0)
      throw Error("coset peeling failed to cancel the t-exponent");
    if (C.c0.contains(peeled.u)) return Decision<Word>::yes(peeled.u);
    return negative();
  }
  if (h.t != 0) return negative();
  if (C.c0.contains(h.u)) return Decision<Word>::yes(h.u);
  return negative();
}

Decision<ConjugatorCertificate> conjugators(const FbcElement& g,
                                            const FbcElement& h,
                                            const SearchBudget& budget) {
  if (g.t != h.t) return Decision<ConjugatorCertificate>::no();
  const GroupPresentation& pres = g.pres;
  const Automorphism& phi = pres.phi();
  Automorphism phiA = phi.toPower(g.t);
  std::vector<int> shifts{0};
  for (int m = 1; m <= budget.kmax; ++m) {
    shifts.push_back(m);
    shifts.push_back(-m);
  }
  for (int c : shifts) {
    auto dec =
        twistedConjugator(h.u, phi.applyPower(g.u, c), phiA, budget.radius);
    if (!dec.isYes()) continue;
    FbcElement witness = fbcElement(pres, c, *dec.certificate);
    if (!fbcConjugate(g, witness).sameValue(h))
      throw Error("conjugator certificate failed exact verification");
    return Decision<ConjugatorCertificate>::yes(
        {witness, centralize(g, budget)});
  }
  return Decision<ConjugatorCertificate>::unknown();
}

}  // namespace fbc
