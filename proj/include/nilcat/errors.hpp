#pragma once

#include <stdexcept>
#include <string>

namespace nilcat {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class DiagonalBracket : public Error {
public:
  using Error::Error;
};

class NotNilpotent : public Error {
public:
  using Error::Error;
};

class VectorInDerivedAlgebra : public Error {
public:
  using Error::Error;
};

class NotAnIdeal : public Error {
public:
  using Error::Error;
};

class DimensionTooSmall : public Error {
public:
  using Error::Error;
};

class InadmissibleDimension : public Error {
public:
  using Error::Error;
};

class MissingParameter : public Error {
public:
  using Error::Error;
};

class UnexpectedParameter : public Error {
public:
  using Error::Error;
};

class BoundsViolation : public Error {
public:
  using Error::Error;
};

}  // namespace nilcat
