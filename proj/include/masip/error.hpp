#pragma once

#include <stdexcept>
#include <string>

namespace masip {

// Base of all library errors. The category maps onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept = 0;
};

// Bad invocation or an unsatisfiable request (exit 1).
class UsageError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

// Unreadable, malformed or rejected input (exit 2).
class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

// A set-algebra precondition that the caller should have guaranteed (exit 3).
class ConsistencyError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

}  // namespace masip
