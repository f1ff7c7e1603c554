#include "fbc/brinkmann.hpp"

#include <map>

namespace fbc {

Decision<PeriodCertificate> findPeriod(const Word& x, const Automorphism& phi,
                                       int kmax) {
  const int rank = phi.rank();
  if (x.empty()) return Decision<PeriodCertificate>::yes({1, Word()});
  CyclicWord target = cyclicForm(rank, x).cyc;
  Word cur = x;
  for (int k = 1; k <= kmax; ++k) {
    cur = phi.apply(cur);
    if (cyclicForm(rank, cur).cyc == target) {
      auto z = conjugacyWitness(rank, x, cur);
      return Decision<PeriodCertificate>::yes({k, *z});
    }
  }
  return Decision<PeriodCertificate>::unknown();
}

Decision<int> brinkmannConjugacy(const Word& x, const Word& y,
                                 const Automorphism& phi, int kmax) {
  const int rank = phi.rank();
  CyclicWord target = cyclicForm(rank, y).cyc;
  // Memoized orbit scan, |k| ascending with positive k first on ties.
  std::map<int, CyclicWord> canon;
  auto canonAt = [&](int k) -> const CyclicWord& {
    auto it = canon.find(k);
    if (it == canon.end())
      it = canon.emplace(k, cyclicForm(rank, phi.applyPower(x, k)).cyc).first;
    return it->second;
  };
  for (int m = 0; m <= kmax; ++m) {
    if (canonAt(m) == target) return Decision<int>::yes(m);
    if (m > 0 && canonAt(-m) == target) return Decision<int>::yes(-m);
  }
  return Decision<int>::unknown();
}

}  // namespace fbc
