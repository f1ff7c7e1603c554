#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fbc/word.hpp"

namespace fbc {

// Automorphism of F_n given by generator images. Powers (including negative
// ones) and the inverse are cached for the lifetime of the value; copies
// share the cache.
class Automorphism {
 public:
  Automorphism(int rank, std::vector<Word> images);
  static Automorphism identity(int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const { return images_.at(generator); }

  Word apply(const Word& w) const;
  // apply(phi^k, w); negative k requires invertibility.
  Word applyPower(const Word& w, int k) const;

  // Throws NotBijective when the images do not generate F_n.
  Automorphism inverse() const;
  Automorphism toPower(int k) const;

  bool isIdentity() const;
  bool operator==(const Automorphism& other) const {
    return rank_ == other.rank_ && images_ == other.images_;
  }

 private:
  const std::vector<Word>& powerImages(int k) const;
  const std::vector<Word>& powerImagesLocked(int k) const;

  int rank_;
  std::vector<Word> images_;

  struct Cache {
    std::mutex mutex;
    std::map<int, std::vector<Word>> powers;
    std::optional<std::vector<Word>> inverseImages;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Right-to-left chaining: apply(compose(phi, psi), w) = psi(phi(w)).
Automorphism compose(const Automorphism& first, const Automorphism& second);

Word applyImages(const std::vector<Word>& images, const Word& w);

}  // namespace fbc
