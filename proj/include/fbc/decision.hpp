#pragma once

#include <optional>
#include <string>

namespace fbc {

enum class Outcome { Yes, No, Unknown };

// Honest encoding of bounded searches: Yes always carries a certificate the
// caller has verified exactly; No only comes from exact procedures.
template <typename Cert>
struct Decision {
  Outcome outcome = Outcome::Unknown;
  std::optional<Cert> certificate;

  static Decision yes(Cert c) { return {Outcome::Yes, std::move(c)}; }
  static Decision no() { return {Outcome::No, std::nullopt}; }
  static Decision unknown() { return {Outcome::Unknown, std::nullopt}; }

  bool isYes() const { return outcome == Outcome::Yes; }
  bool isNo() const { return outcome == Outcome::No; }
  bool isUnknown() const { return outcome == Outcome::Unknown; }
};

inline std::string outcomeName(Outcome o) {
  switch (o) {
    case Outcome::Yes:
      return "yes";
    case Outcome::No:
      return "no";
    default:
      return "unknown";
  }
}

struct SearchBudget {
  int radius = 6;  // conjugator ball radius
  int kmax = 12;   // exponent scan range
};

}  // namespace fbc
