#ifndef ORTHOCHART_ERRORS_HPP_
#define ORTHOCHART_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace orthochart {

// Every failure raised by the library derives from Error so callers can
// catch the whole family at a boundary (the CLI does exactly that).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch(unsigned long a, unsigned long b)
      : Error("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class TableMismatch : public Error {
 public:
  TableMismatch() : Error("polynomials live in different rings") {}
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("monomial exponent overflow") {}
};

class MissingImage : public Error {
 public:
  explicit MissingImage(const std::string& var)
      : Error("no image given for variable " + var) {}
};

class InvalidDivisor : public Error {
 public:
  InvalidDivisor() : Error("zero polynomial used as divisor") {}
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyVariety : public Error {
 public:
  EmptyVariety() : Error("ideal is the unit ideal") {}
};

class InvalidChart : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class InvalidUnit : public Error {
 public:
  InvalidUnit() : Error("generic fiber requires a nonzero value for pi") {}
};

// Raised when a Groebner computation exceeds its wall-clock or pair budget.
class Timeout : public Error {
 public:
  using Error::Error;
};

}  // namespace orthochart

#endif  // ORTHOCHART_ERRORS_HPP_
