#pragma once

#include <stdexcept>
#include <string>

namespace wittgrass {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input (bad prime, degree, partition text, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Operands built over different rings, precisions or shapes.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

// The stored p-adic precision does not determine the requested quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured work bound. Never truncated.
class WorkBoundExceeded : public Error {
 public:
  using Error::Error;
};

// Exact division failed where the mathematics guarantees it cannot.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace wittgrass
