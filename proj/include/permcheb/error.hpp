#pragma once

#include <stdexcept>
#include <string>

namespace permcheb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or malformed input (wrong pattern literal, invalid path, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation was asked to go beyond its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A t-expression with a nonzero odd part was asked to become a function of x.
class IrreducibleExpression : public Error {
 public:
  using Error::Error;
};

class UnsupportedPattern : public Error {
 public:
  using Error::Error;
};

class OutOfStatedRange : public Error {
 public:
  using Error::Error;
};

}  // namespace permcheb
