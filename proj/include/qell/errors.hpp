#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qell {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };
struct NotHomomorphism : Error { using Error::Error; };
struct NotCentralizing : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NotRootOfUnity : Error { using Error::Error; };
struct NotCharacter : Error { using Error::Error; };
struct ContextMismatch : Error { using Error::Error; };
struct SigmaNotInH : Error { using Error::Error; };
struct MissingComponent : Error { using Error::Error; };
struct DecompositionError : Error { using Error::Error; };
struct AxiomViolation : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };
struct WrongCycleType : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace qell
