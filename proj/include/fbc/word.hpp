#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fbc/errors.hpp"

namespace fbc {

// A letter is a nonzero int: +(i+1) is generator i, -(i+1) its inverse.
using Letter = int;

constexpr Letter inverseLetter(Letter l) { return -l; }

// Ordering key used for canonical rotations: positive letters first
// (a < b < ... < a^-1 < b^-1 < ...).
constexpr int letterKey(int rank, Letter l) {
  return l > 0 ? l - 1 : rank + (-l - 1);
}

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  std::optional<int> index(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

// Freely reduced word in F_n. The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Free reduction of an arbitrary letter sequence.
  static Word fromLetters(std::span<const Letter> raw);
  static Word fromLetters(std::initializer_list<Letter> raw) {
    return fromLetters(std::span<const Letter>(raw.begin(), raw.end()));
  }
  static Word generator(int index, int sign = +1);

  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter letter(int i) const { return letters_[i]; }

  bool operator==(const Word&) const = default;
  // Shortlex with plain letter value order; used for deterministic containers.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  friend class WordBuilder;
  std::vector<Letter> letters_;
};

// Incremental builder that cancels on push, so concatenations stay reduced.
class WordBuilder {
 public:
  void push(Letter l);
  void pushWord(const Word& w);
  void pushInverse(const Word& w);
  Word take();

 private:
  std::vector<Letter> letters_;
};

// Bounds-checked reduction; letters must reference generators 0..rank-1.
Word reduceChecked(int rank, std::span<const Letter> raw);

Word mul(const Word& u, const Word& v);
Word mul(const Word& u, const Word& v, const Word& w);
Word invert(const Word& u);
Word power(const Word& u, int k);
// z^-1 u z, reduced.
Word conjugateWord(const Word& u, const Word& z);

// Cyclically reduced word stored as its canonical (least) rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  // `letters` must be cyclically reduced; canonicalizes the rotation.
  static CyclicWord canonicalize(int rank, std::span<const Letter> letters);

  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }

  bool operator==(const CyclicWord&) const = default;
  std::strong_ordering operator<=>(const CyclicWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct CyclicForm {
  CyclicWord cyc;  // canonical rotation of the cyclic reduction of x
  Word conj;       // x = conj * cyc * conj^-1
};

// Index of the lexicographically least rotation (Booth); ties -> smallest.
int leastRotationIndex(int rank, std::span<const Letter> letters);

CyclicForm cyclicForm(int rank, const Word& x);

// Some z with x = z^-1 y z, or nullopt if x and y are not conjugate. Exact.
std::optional<Word> conjugacyWitness(int rank, const Word& x, const Word& y);

struct RootPower {
  Word root;     // not a proper power
  int exponent;  // maximal m with x = root^m
};

RootPower primitiveRoot(int rank, const Word& x);

// The u with C_{F_n}(x) = <u>. Throws IdentityInput for x = 1.
Word freeCentralizer(int rank, const Word& x);

}  // namespace fbc
