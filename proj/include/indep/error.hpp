#pragma once

#include <stdexcept>
#include <string>

namespace indep {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a precondition (mismatched ground sets, out-of-range element).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed instance text or command-line value. `key()` names the offending
// key or token when there is one.
class ParseError : public Error {
 public:
  ParseError(std::string key, const std::string& message)
      : Error(message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// A materialization or enumeration would exceed the configured budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An axiom needing an ambient closure operator was checked without one.
class MissingClosure : public Error {
 public:
  using Error::Error;
};

// Free amalgamation over a base on which the two graphs disagree.
class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

}  // namespace indep
