#include "fbc/automorphism.hpp"

#include <cmath>

#include "fbc/errors.hpp"
#include "fbc/stallings.hpp"

namespace fbc {

Word applyImages(const std::vector<Word>& images, const Word& w) {
  WordBuilder b;
  for (Letter l : w.letters()) {
    if (l > 0)
      b.pushWord(images.at(l - 1));
    else
      b.pushInverse(images.at(-l - 1));
  }
  return b.take();
}

Automorphism::Automorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank)
    throw Error("automorphism needs one image per generator");
  for (const auto& im : images_)
    for (Letter l : im.letters())
      if (std::abs(l) > rank)
        throw UnknownGenerator("image uses a letter outside the alphabet");
}

Automorphism Automorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (int i = 0; i < rank; ++i) images.push_back(Word::generator(i));
  return {rank, std::move(images)};
}

Word Automorphism::apply(const Word& w) const { return applyImages(images_, w); }

bool Automorphism::isIdentity() const {
  for (int i = 0; i < rank_; ++i)
    if (images_[i] != Word::generator(i)) return false;
  return true;
}

const std::vector<Word>& Automorphism::powerImages(int k) const {
  std::scoped_lock lock(cache_->mutex);
  return powerImagesLocked(k);
}

const std::vector<Word>& Automorphism::powerImagesLocked(int k) const {
  auto it = cache_->powers.find(k);
  if (it != cache_->powers.end()) return it->second;
  std::vector<Word> result;
  if (k == 0) {
    for (int i = 0; i < rank_; ++i) result.push_back(Word::generator(i));
  } else if (k == 1) {
    result = images_;
  } else if (k == -1) {
    if (!cache_->inverseImages) {
      // Express each generator through the folded graph of the images.
      SubgroupGraph graph = SubgroupGraph::build(rank_, images_);
      std::vector<Word> inv;
      for (int i = 0; i < rank_; ++i) {
        auto expr = graph.express(Word::generator(i));
        if (!expr)
          throw NotBijective(
              "generator images do not generate F_n (endomorphism, not "
              "automorphism)");
        WordBuilder b;
        for (int s : *expr) b.push(s);
        inv.push_back(b.take());
      }
      for (int i = 0; i < rank_; ++i)
        if (applyImages(images_, inv[i]) != Word::generator(i))
          throw NotBijective("inverse verification failed");
      cache_->inverseImages = std::move(inv);
    }
    result = *cache_->inverseImages;
  } else {
    int step = k > 0 ? 1 : -1;
    // References into cache_->powers stay valid across insertions.
    const std::vector<Word>& one = powerImagesLocked(step);
    const std::vector<Word>& prev = powerImagesLocked(k - step);
    for (const auto& w : prev) result.push_back(applyImages(one, w));
  }
  return cache_->powers.emplace(k, std::move(result)).first->second;
}

Word Automorphism::applyPower(const Word& w, int k) const {
  if (k == 0) return w;
  if (k == 1) return apply(w);
  return applyImages(powerImages(k), w);
}

Automorphism Automorphism::inverse() const {
  Automorphism out(rank_, powerImages(-1));
  return out;
}

Automorphism Automorphism::toPower(int k) const {
  return {rank_, powerImages(k)};
}

Automorphism compose(const Automorphism& first, const Automorphism& second) {
  if (first.rank() != second.rank())
    throw AlphabetMismatch("composing automorphisms of different ranks");
  std::vector<Word> images;
  images.reserve(first.rank());
  for (int i = 0; i < first.rank(); ++i)
    images.push_back(second.apply(first.image(i)));
  return {first.rank(), std::move(images)};
}

}  // namespace fbc
