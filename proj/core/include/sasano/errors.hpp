#pragma once

#include <stdexcept>
#include <string>

namespace sasano {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Division by an exact zero, or an operation outside the rationals.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ChartMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedSystem : public Error {
 public:
  using Error::Error;
};

class UndefinedAction : public Error {
 public:
  using Error::Error;
};

class NormalizationFailed : public Error {
 public:
  using Error::Error;
};

class NotStandardForm : public Error {
 public:
  using Error::Error;
};

class PoleOnPath : public Error {
 public:
  using Error::Error;
};

}  // namespace sasano
