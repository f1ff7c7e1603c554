#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbc/decision.hpp"
#include "fbc/element.hpp"
#include "fbc/stallings.hpp"

namespace fbc {

enum class CentralizerStatus { Exact, BudgetLimited };

// Finite generating set for C(t^a x): the F_n-part subgroup embedded at t^0
// plus at most one vertical generator t^e z.
struct CentralizerResult {
  FbcElement input;
  std::vector<FbcElement> generators;
  SubgroupGraph c0;
  std::optional<FbcElement> torusGenerator;
  CentralizerStatus status = CentralizerStatus::Exact;
  std::string report;  // set when budget-limited
};

// Every returned generator is checked to commute with the input; that
// postcondition is unconditional, independent of status.
CentralizerResult centralize(const FbcElement& g, const SearchBudget& budget);

// Structural membership via coset peeling along the vertical generator.
// Exact for Exact results; a No under BudgetLimited degrades to Unknown.
// The certificate is the F_n-part that was located in c0.
Decision<Word> centralizerMember(const CentralizerResult& C,
                                 const FbcElement& h);

struct ConjugatorCertificate {
  FbcElement witness;            // conjugate(g, witness) = h, verified
  CentralizerResult centralizer; // solution set = centralizer * witness
};

Decision<ConjugatorCertificate> conjugators(const FbcElement& g,
                                            const FbcElement& h,
                                            const SearchBudget& budget);

}  // namespace fbc
