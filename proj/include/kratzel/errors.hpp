#pragma once

#include <stdexcept>
#include <string>

namespace kratzel {

// Base for every failure raised by the library. The CLI maps all of these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the sector / parameter range where the formula holds.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Gamma-function argument at (or within tolerance of) a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Series reversion requested for a series with a non-zero constant term or a
// vanishing linear term.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

// Coalescing poles in the residue sums: the result would carry log terms.
class LogarithmicCase : public Error {
 public:
  using Error::Error;
};

}  // namespace kratzel
