#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fbc/element.hpp"
#include "fbc/word.hpp"

namespace fbc {

// Word syntax: whitespace-separated tokens `g`, `g^-1` or `g^k` (k nonzero,
// expanded to |k| letters); `1` is the empty word.
Word parseWord(const Alphabet& alphabet, const std::string& text);
std::string formatWord(const Alphabet& alphabet, const Word& w);

// Element syntax: `t^a <word>`, `t` alone meaning t^1, `t^0` omissible.
FbcElement parseElement(const GroupPresentation& pres, const std::string& text);
std::string formatElement(const FbcElement& g);

// Letters of the group alphabet {t^+-1} u generators^+-1, coded as
// +-(i+1) for generator i and +-(rank+1) for t.
int parseGroupLetter(const Alphabet& alphabet, const std::string& token);
std::string formatGroupLetter(const Alphabet& alphabet, int code);

// Presentation file: `rank = n`, `gens = g1 g2 ...`, one `phi gi = <word>`
// line per generator. Blank lines and `#` comments are ignored.
GroupPresentation parsePresentation(std::istream& in);
GroupPresentation parsePresentationFile(const std::string& path);

std::vector<std::string> splitTokens(const std::string& text);

}  // namespace fbc
