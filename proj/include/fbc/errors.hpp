#pragma once

#include <stdexcept>
#include <string>

namespace fbc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownGenerator : Error {
  using Error::Error;
};
struct IdentityInput : Error {
  using Error::Error;
};
struct NotBijective : Error {
  using Error::Error;
};
struct PresentationMismatch : Error {
  using Error::Error;
};
struct NotAMember : Error {
  using Error::Error;
};
struct ContextMismatch : Error {
  using Error::Error;
};
struct InvalidWitness : Error {
  using Error::Error;
};
struct AlphabetMismatch : Error {
  using Error::Error;
};
struct MissingWitness : Error {
  using Error::Error;
};
struct SyntaxError : Error {
  using Error::Error;
};
struct UnknownTerminal : SyntaxError {
  using SyntaxError::SyntaxError;
};
struct BudgetTooLarge : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace fbc
