#pragma once

#include <stdexcept>
#include <string>

namespace ffz {

/// Base class for every error raised by the library. The message is prefixed
/// with the module that raised it, e.g. "extension: uncovered ramified prime T".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Malformed text input (polynomials, configs, permutations, dumps).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input was well formed but violates a precondition or validation rule.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computed result failed an internal consistency check.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ffz
