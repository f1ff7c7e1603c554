#include "fbc/word.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace fbc {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("alphabet must have positive rank");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty generator name");
    if (n == "t" || n == "1")
      throw Error("generator name '" + n + "' is reserved");
    if (!seen.insert(n).second)
      throw Error("duplicate generator name '" + n + "'");
  }
}

std::optional<int> Alphabet::index(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void WordBuilder::push(Letter l) {
  if (!letters_.empty() && letters_.back() == -l)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

void WordBuilder::pushWord(const Word& w) {
  for (Letter l : w.letters()) push(l);
}

void WordBuilder::pushInverse(const Word& w) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    push(-*it);
}

Word Word::fromLetters(std::span<const Letter> raw) {
  WordBuilder b;
  for (Letter l : raw) b.push(l);
  return b.take();
}

Word WordBuilder::take() {
  Word w;
  w.letters_ = std::move(letters_);
  letters_.clear();
  return w;
}

Word Word::generator(int index, int sign) {
  Word w;
  w.letters_.push_back(sign >= 0 ? index + 1 : -(index + 1));
  return w;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return letters_ <=> other.letters_;
}

Word reduceChecked(int rank, std::span<const Letter> raw) {
  for (Letter l : raw) {
    if (l == 0 || std::abs(l) > rank)
      throw UnknownGenerator("letter index " + std::to_string(l) +
                             " exceeds rank " + std::to_string(rank));
  }
  return Word::fromLetters(raw);
}

Word mul(const Word& u, const Word& v) {
  WordBuilder b;
  b.pushWord(u);
  b.pushWord(v);
  return b.take();
}

Word mul(const Word& u, const Word& v, const Word& w) {
  WordBuilder b;
  b.pushWord(u);
  b.pushWord(v);
  b.pushWord(w);
  return b.take();
}

Word invert(const Word& u) {
  WordBuilder b;
  b.pushInverse(u);
  return b.take();
}

Word power(const Word& u, int k) {
  WordBuilder b;
  for (int i = 0; i < std::abs(k); ++i) {
    if (k > 0)
      b.pushWord(u);
    else
      b.pushInverse(u);
  }
  return b.take();
}

Word conjugateWord(const Word& u, const Word& z) {
  WordBuilder b;
  b.pushInverse(z);
  b.pushWord(u);
  b.pushWord(z);
  return b.take();
}

CyclicWord CyclicWord::canonicalize(int rank, std::span<const Letter> letters) {
  CyclicWord c;
  if (letters.empty()) return c;
  int k = leastRotationIndex(rank, letters);
  auto& out = c.letters_;
  out.reserve(letters.size());
  for (size_t i = 0; i < letters.size(); ++i)
    out.push_back(letters[(k + i) % letters.size()]);
  return c;
}

// Booth's least-rotation algorithm over the letterKey order.
int leastRotationIndex(int rank, std::span<const Letter> letters) {
  const int n = static_cast<int>(letters.size());
  if (n <= 1) return 0;
  auto key = [&](int i) { return letterKey(rank, letters[i % n]); };
  std::vector<int> f(2 * n, -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    int i = f[j - k - 1];
    while (i != -1 && key(j) != key(k + i + 1)) {
      if (key(j) < key(k + i + 1)) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && key(j) != key(k)) {
      if (key(j) < key(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

CyclicForm cyclicForm(int rank, const Word& x) {
  // Strip matching ends until cyclically reduced: x = p * core * p^-1.
  const auto& ls = x.letters();
  int lo = 0, hi = static_cast<int>(ls.size());
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(ls.begin() + lo, ls.begin() + hi);
  std::vector<Letter> prefix(ls.begin(), ls.begin() + lo);

  CyclicForm out;
  out.cyc = CyclicWord::canonicalize(rank, core);
  // core = alpha * rotated(core) * alpha^-1 where alpha = first `off` letters.
  int off = 0;
  if (!core.empty()) {
    off = leastRotationIndex(rank, core);
  }
  WordBuilder b;
  for (Letter l : prefix) b.push(l);
  for (int i = 0; i < off; ++i) b.push(core[i]);
  out.conj = b.take();
  return out;
}

std::optional<Word> conjugacyWitness(int rank, const Word& x, const Word& y) {
  CyclicForm fx = cyclicForm(rank, x);
  CyclicForm fy = cyclicForm(rank, y);
  if (fx.cyc != fy.cyc) return std::nullopt;
  // x = w1 c w1^-1, y = w2 c w2^-1  =>  x = (w2 w1^-1)^-1 y (w2 w1^-1).
  Word z = mul(fy.conj, invert(fx.conj));
  return z;
}

RootPower primitiveRoot(int rank, const Word& x) {
  if (x.empty()) return {Word(), 1};
  CyclicForm f = cyclicForm(rank, x);
  const auto& c = f.cyc.letters();
  const int n = static_cast<int>(c.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int i = 0; i < n && periodic; ++i)
      periodic = c[i] == c[(i + p) % n];
    if (!periodic) continue;
    Word d = Word::fromLetters(std::span<const Letter>(c.data(), p));
    WordBuilder b;
    b.pushWord(f.conj);
    b.pushWord(d);
    b.pushInverse(f.conj);
    return {b.take(), n / p};
  }
  return {x, 1};  // unreachable: p = n always matches
}

Word freeCentralizer(int rank, const Word& x) {
  if (x.empty())
    throw IdentityInput("centralizer of 1 in F_n is the whole group");
  return primitiveRoot(rank, x).root;
}

}  // namespace fbc
