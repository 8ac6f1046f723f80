#pragma once

#include <stdexcept>
#include <string>

namespace qpat {

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("degree of the zero polynomial is undefined") {}
};

class NegativeExponentAtZero : public Error {
 public:
  explicit NegativeExponentAtZero(const std::string& var)
      : Error("cannot substitute 0 for '" + var + "': negative exponent present") {}
};

class NonIntegralSpecialization : public Error {
 public:
  using Error::Error;
};

class NotAWeightablePattern : public Error {
 public:
  using Error::Error;
};

class PositionNotADescent : public Error {
 public:
  using Error::Error;
};

class PatternNotInTable : public Error {
 public:
  using Error::Error;
};

class InvalidSubset : public Error {
 public:
  using Error::Error;
};

class IncompatibleBundle : public Error {
 public:
  using Error::Error;
};

class UnsupportedPattern : public Error {
 public:
  using Error::Error;
};

}  // namespace qpat
