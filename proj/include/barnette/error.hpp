#pragma once

#include <stdexcept>
#include <string>

namespace barnette {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition. Maps to CLI exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A search ran past its node or time cap. Maps to CLI exit code 2.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A structural invariant that must hold by construction failed.
/// Seeing one of these means a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

}  // namespace barnette
