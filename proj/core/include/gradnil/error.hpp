#pragma once

#include <stdexcept>
#include <string>

namespace gradnil {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input object violates an algebraic axiom. `axiom()` names the law,
/// `witness()` pins down the offending indices.
class ValidationError : public Error {
 public:
  ValidationError(std::string axiom, std::string witness)
      : Error(axiom + " violated at " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

/// A computation reached a state that a proven statement rules out. Seeing
/// one of these means a bug in this library, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gradnil
