#ifndef MSR_ERRORS_HPP
#define MSR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msr {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotPrimeError : public Error {
  public:
    using Error::Error;
};

class ReduciblePolynomialError : public Error {
  public:
    using Error::Error;
};

class OrderTooLargeError : public Error {
  public:
    using Error::Error;
};

class FieldMismatchError : public Error {
  public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

class NotSquareError : public Error {
  public:
    using Error::Error;
};

class SingularError : public Error {
  public:
    using Error::Error;
};

class InvalidParametersError : public Error {
  public:
    using Error::Error;
};

class NoValidRotationError : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Raised by the code-file parser; carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, int line) : Error(what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

}  // namespace msr

#endif
