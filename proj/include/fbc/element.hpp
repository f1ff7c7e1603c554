#pragma once

#include <memory>

#include "fbc/automorphism.hpp"
#include "fbc/word.hpp"

namespace fbc {

// F_n x|_phi Z, with t-conjugation acting as phi: t^-1 u t = u phi.
class GroupPresentation {
 public:
  // Triggers inversion of phi up front, so negative powers are available.
  GroupPresentation(Alphabet alphabet, Automorphism phi);

  const Alphabet& alphabet() const { return impl_->alphabet; }
  const Automorphism& phi() const { return impl_->phi; }
  int rank() const { return impl_->alphabet.rank(); }

  bool sameAs(const GroupPresentation& other) const;

 private:
  struct Impl {
    Alphabet alphabet;
    Automorphism phi;
  };
  std::shared_ptr<const Impl> impl_;
};

// Normal form t^a * u of an element of F_n x|_phi Z.
struct FbcElement {
  GroupPresentation pres;
  int t = 0;
  Word u;

  bool sameValue(const FbcElement& other) const {
    return t == other.t && u == other.u;
  }
};

FbcElement fbcIdentity(const GroupPresentation& pres);
FbcElement fbcElement(const GroupPresentation& pres, int t, Word u);

// t^a u * t^b v = t^(a+b) (u phi^b) v.
FbcElement fbcMul(const FbcElement& g, const FbcElement& h);
FbcElement fbcInv(const FbcElement& g);
FbcElement fbcPow(const FbcElement& g, int k);
bool fbcCommute(const FbcElement& g, const FbcElement& h);
// h^-1 g h.
FbcElement fbcConjugate(const FbcElement& g, const FbcElement& h);

}  // namespace fbc
