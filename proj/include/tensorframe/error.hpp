#pragma once

#include <stdexcept>
#include <string>

namespace tensorframe {

/// Base of every error the library raises. Callers that only need to
/// distinguish "bad input" from "mathematical failure" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class ModuleMismatch : public Error {
 public:
  using Error::Error;
};

class SingularOperator : public Error {
 public:
  using Error::Error;
};

class NotAFrameError : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class MultiplicityTooHigh : public Error {
 public:
  using Error::Error;
};

class NotAFrameVector : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

}  // namespace tensorframe
