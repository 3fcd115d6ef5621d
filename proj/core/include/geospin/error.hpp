#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace geospin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset,
             std::vector<std::string> expected = {})
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Evaluation outside the domain of an elementary function or of a chart.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The metric evaluated to something that is not symmetric positive definite.
class DegenerateMetricError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace geospin
