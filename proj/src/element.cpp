#include "fbc/element.hpp"

#include "fbc/errors.hpp"

namespace fbc {

GroupPresentation::GroupPresentation(Alphabet alphabet, Automorphism phi)
    : impl_(std::make_shared<Impl>(Impl{std::move(alphabet), std::move(phi)})) {
  if (impl_->phi.rank() != impl_->alphabet.rank())
    throw AlphabetMismatch("automorphism rank does not match alphabet");
  impl_->phi.inverse();  // fails early on a non-bijective endomorphism
}

bool GroupPresentation::sameAs(const GroupPresentation& other) const {
  return impl_ == other.impl_ ||
         (impl_->alphabet == other.impl_->alphabet &&
          impl_->phi == other.impl_->phi);
}

namespace {
void checkSame(const FbcElement& g, const FbcElement& h) {
  if (!g.pres.sameAs(h.pres))
    throw PresentationMismatch("elements of different presentations");
}
}  // namespace

FbcElement fbcIdentity(const GroupPresentation& pres) {
  return {pres, 0, Word()};
}

FbcElement fbcElement(const GroupPresentation& pres, int t, Word u) {
  return {pres, t, std::move(u)};
}

FbcElement fbcMul(const FbcElement& g, const FbcElement& h) {
  checkSame(g, h);
  return {g.pres, g.t + h.t,
          mul(g.pres.phi().applyPower(g.u, h.t), h.u)};
}

FbcElement fbcInv(const FbcElement& g) {
  return {g.pres, -g.t, g.pres.phi().applyPower(invert(g.u), -g.t)};
}

FbcElement fbcPow(const FbcElement& g, int k) {
  FbcElement acc = fbcIdentity(g.pres);
  FbcElement step = k >= 0 ? g : fbcInv(g);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) acc = fbcMul(acc, step);
  return acc;
}

bool fbcCommute(const FbcElement& g, const FbcElement& h) {
  return fbcMul(g, h).sameValue(fbcMul(h, g));
}

FbcElement fbcConjugate(const FbcElement& g, const FbcElement& h) {
  return fbcMul(fbcMul(fbcInv(h), g), h);
}

}  // namespace fbc
