#include "fbc/parse.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fbc/errors.hpp"

namespace fbc {

std::vector<std::string> splitTokens(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

namespace {

// Splits `name^k` into (name, k); plain `name` gives k = 1.
std::pair<std::string, int> splitPower(const std::string& token) {
  auto caret = token.rfind('^');
  if (caret == std::string::npos) return {token, 1};
  std::string base = token.substr(0, caret);
  std::string exp = token.substr(caret + 1);
  if (base.empty() || exp.empty())
    throw ParseError("malformed token '" + token + "'");
  char* end = nullptr;
  long k = std::strtol(exp.c_str(), &end, 10);
  if (*end != '\0' || k == 0)
    throw ParseError("bad exponent in token '" + token + "'");
  return {base, static_cast<int>(k)};
}

void appendToken(const Alphabet& alphabet, const std::string& token,
                 std::vector<Letter>& out) {
  if (token == "1") return;
  auto [base, k] = splitPower(token);
  auto idx = alphabet.index(base);
  if (!idx)
    throw UnknownGenerator("unknown generator '" + base + "'");
  Letter l = k > 0 ? *idx + 1 : -(*idx + 1);
  for (int i = 0; i < std::abs(k); ++i) out.push_back(l);
}

}  // namespace

Word parseWord(const Alphabet& alphabet, const std::string& text) {
  std::vector<Letter> raw;
  for (const auto& tok : splitTokens(text)) appendToken(alphabet, tok, raw);
  return Word::fromLetters(raw);
}

std::string formatWord(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    Letter l = w.letter(i);
    os << alphabet.name(std::abs(l) - 1);
    if (l < 0) os << "^-1";
  }
  return os.str();
}

FbcElement parseElement(const GroupPresentation& pres,
                        const std::string& text) {
  auto toks = splitTokens(text);
  int t = 0;
  size_t start = 0;
  if (!toks.empty() && toks[0] == "t^0") {
    start = 1;  // t^0 is omissible but accepted
  } else if (!toks.empty() &&
             (toks[0] == "t" || toks[0].rfind("t^", 0) == 0)) {
    auto [base, k] = splitPower(toks[0]);
    if (base == "t") {
      t = toks[0] == "t" ? 1 : k;
      start = 1;
    }
  }
  std::vector<Letter> raw;
  for (size_t i = start; i < toks.size(); ++i)
    appendToken(pres.alphabet(), toks[i], raw);
  return fbcElement(pres, t, Word::fromLetters(raw));
}

std::string formatElement(const FbcElement& g) {
  std::ostringstream os;
  if (g.t != 0) {
    if (g.t == 1)
      os << "t";
    else
      os << "t^" << g.t;
    if (!g.u.empty()) os << ' ';
  }
  if (g.u.empty() && g.t == 0) return "1";
  if (!g.u.empty()) os << formatWord(g.pres.alphabet(), g.u);
  return os.str();
}

int parseGroupLetter(const Alphabet& alphabet, const std::string& token) {
  auto [base, k] = splitPower(token);
  if (k != 1 && k != -1)
    throw ParseError("group letter token must have exponent +-1");
  int idx;
  if (base == "t") {
    idx = alphabet.rank();
  } else {
    auto gi = alphabet.index(base);
    if (!gi) throw UnknownGenerator("unknown generator '" + base + "'");
    idx = *gi;
  }
  return k > 0 ? idx + 1 : -(idx + 1);
}

std::string formatGroupLetter(const Alphabet& alphabet, int code) {
  int idx = std::abs(code) - 1;
  std::string base = idx == alphabet.rank() ? "t" : alphabet.name(idx);
  return code > 0 ? base : base + "^-1";
}

GroupPresentation parsePresentation(std::istream& in) {
  int rank = -1;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> phiLines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = splitTokens(line);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("presentation line " + std::to_string(lineno) + ": " +
                       msg);
    };
    if (toks[0] == "rank") {
      if (toks.size() != 3 || toks[1] != "=") fail("expected `rank = n`");
      rank = std::atoi(toks[2].c_str());
      if (rank <= 0) fail("rank must be positive");
    } else if (toks[0] == "gens") {
      if (toks.size() < 3 || toks[1] != "=") fail("expected `gens = g1 ...`");
      names.assign(toks.begin() + 2, toks.end());
    } else if (toks[0] == "phi") {
      if (toks.size() < 4 || toks[2] != "=") fail("expected `phi g = word`");
      std::string rhs;
      for (size_t i = 3; i < toks.size(); ++i) {
        if (i > 3) rhs += ' ';
        rhs += toks[i];
      }
      phiLines.emplace_back(toks[1], rhs);
    } else {
      fail("unrecognized directive '" + toks[0] + "'");
    }
  }
  if (rank < 0) throw ParseError("presentation missing `rank = n`");
  if (static_cast<int>(names.size()) != rank)
    throw ParseError("presentation needs exactly `rank` generator names");
  Alphabet alphabet(names);
  std::vector<Word> images(rank);
  std::vector<bool> have(rank, false);
  for (const auto& [gen, rhs] : phiLines) {
    auto idx = alphabet.index(gen);
    if (!idx) throw ParseError("phi line for unknown generator '" + gen + "'");
    images[*idx] = parseWord(alphabet, rhs);
    have[*idx] = true;
  }
  for (int i = 0; i < rank; ++i)
    if (!have[i])
      throw ParseError("missing phi line for generator '" + alphabet.name(i) +
                       "'");
  return {std::move(alphabet), Automorphism(rank, std::move(images))};
}

GroupPresentation parsePresentationFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file '" + path + "'");
  return parsePresentation(in);
}

}  // namespace fbc
