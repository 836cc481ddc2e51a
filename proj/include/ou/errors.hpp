#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ou {

/// Base of every domain failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries a 1-based line and column.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidDiagram : public Error {
public:
  using Error::Error;
};

class InvalidWord : public Error {
public:
  using Error::Error;
};

class StrandCountMismatch : public Error {
public:
  StrandCountMismatch(int a, int b)
      : Error("strand count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A glide was requested on a UO interval whose two marks belong to one crossing.
class SameCrossing : public Error {
public:
  using Error::Error;
};

/// The diagram has a closed cascade path and cannot be brought to OU form by glides.
class Cyclic : public Error {
public:
  Cyclic() : Error("cyclic") {}
};

class CapExceeded : public Error {
public:
  explicit CapExceeded(unsigned long long cap)
      : Error("glide cap of " + std::to_string(cap) + " iterations exceeded"), cap_(cap) {}
  unsigned long long cap() const { return cap_; }

private:
  unsigned long long cap_;
};

class NotReducedOU : public Error {
public:
  NotReducedOU() : Error("input tangle is not a reduced OU diagram") {}
};

class NotADivisor : public Error {
public:
  explicit NotADivisor(const std::string& gen) : Error(gen + " does not divide the tangle") {}
};

class ResourceLimit : public Error {
public:
  using Error::Error;
};

}  // namespace ou
