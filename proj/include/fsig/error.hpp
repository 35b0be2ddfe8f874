#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsig {

// Base for every failure raised by the engine. `kind()` is a stable short
// token used by the CLI error record.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Mathematically invalid input: non-prime modulus, non-m-primary ideal, ...
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  const char* kind() const noexcept override { return "parse"; }

 private:
  std::size_t offset_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "overflow"; }
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource"; }
};

}  // namespace fsig
