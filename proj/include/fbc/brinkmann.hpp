#pragma once

#include "fbc/automorphism.hpp"
#include "fbc/decision.hpp"
#include "fbc/word.hpp"

namespace fbc {

struct PeriodCertificate {
  int e0 = 0;  // least k in [1, kmax] with x phi^k ~ x
  Word z;      // x = z^-1 (x phi^{e0}) z
};

// Bounded scan for periodicity modulo conjugation. Equality of canonical
// cyclic forms is exact, so Yes answers are sound and e0 is minimal; Unknown
// only means no period <= kmax exists.
Decision<PeriodCertificate> findPeriod(const Word& x, const Automorphism& phi,
                                       int kmax);

// Bounded Brinkmann conjugacy: least |k| <= kmax (positive first on ties)
// with x phi^k ~ y.
Decision<int> brinkmannConjugacy(const Word& x, const Word& y,
                                 const Automorphism& phi, int kmax);

}  // namespace fbc
