#pragma once

#include <random>
#include <vector>

#include "fbc/element.hpp"
#include "fbc/parse.hpp"

namespace fbctest {

using namespace fbc;

inline Alphabet ab() { return Alphabet({"a", "b"}); }
inline Alphabet abc() { return Alphabet({"a", "b", "c"}); }

// sigma: a <-> b.
inline Automorphism sigma() {
  return Automorphism(2, {Word::generator(1), Word::generator(0)});
}

// nu: a -> ab, b -> b.
inline Automorphism nu() {
  return Automorphism(
      2, {Word::fromLetters({1, 2}), Word::generator(1)});
}

inline GroupPresentation sigmaPres() { return {ab(), sigma()}; }
inline GroupPresentation nuPres() { return {ab(), nu()}; }
inline GroupPresentation idPres() { return {ab(), Automorphism::identity(2)}; }

// A random composition of <= moves Nielsen transformations, together with
// the inverse composition assembled from the known inverses of each move.
struct NielsenSample {
  Automorphism phi;
  Automorphism knownInverse;
};

inline NielsenSample randomNielsen(int rank, std::mt19937& rng, int moves) {
  auto gen = [&](int i, int sign = 1) { return Word::generator(i, sign); };
  Automorphism phi = Automorphism::identity(rank);
  Automorphism inv = Automorphism::identity(rank);
  std::uniform_int_distribution<int> moveDist(0, 2);
  std::uniform_int_distribution<int> genDist(0, rank - 1);
  for (int m = 0; m < moves; ++m) {
    int i = genDist(rng);
    int j = genDist(rng);
    std::vector<Word> images, inverseImages;
    for (int k = 0; k < rank; ++k) {
      images.push_back(gen(k));
      inverseImages.push_back(gen(k));
    }
    switch (moveDist(rng)) {
      case 0:  // swap generators i and j
        images[i] = gen(j);
        images[j] = gen(i);
        inverseImages[i] = gen(j);
        inverseImages[j] = gen(i);
        break;
      case 1:  // invert generator i
        images[i] = gen(i, -1);
        inverseImages[i] = gen(i, -1);
        break;
      default:  // right-multiply: i -> i j
        if (i == j) j = (j + 1) % rank;
        images[i] = mul(gen(i), gen(j));
        inverseImages[i] = mul(gen(i), gen(j, -1));
        break;
    }
    Automorphism move(rank, images);
    Automorphism moveInv(rank, inverseImages);
    phi = compose(phi, move);        // apply(phi', w) = move(phi(w))
    inv = compose(moveInv, inv);     // apply(inv', w) = inv(moveInv(w))
  }
  return {phi, inv};
}

inline Word randomWord(int rank, std::mt19937& rng, int maxLen) {
  std::uniform_int_distribution<int> lenDist(0, maxLen);
  std::uniform_int_distribution<int> letterDist(0, 2 * rank - 1);
  std::vector<Letter> raw;
  int len = lenDist(rng);
  for (int i = 0; i < len; ++i) {
    int v = letterDist(rng);
    raw.push_back(v < rank ? v + 1 : -(v - rank + 1));
  }
  return Word::fromLetters(raw);
}

}  // namespace fbctest
