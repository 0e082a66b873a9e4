#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqhc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies on the excluded ray (-inf, 0) of the principal logarithm.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A vector is not supported in the embedded copy of Y (row 1 of the direct sum).
class NotInSpaceError : public Error {
 public:
  using Error::Error;
};

/// A neighbourhood index exceeds the number of materialized seminorms.
class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

/// A grid position is neither on the built path nor on its row-1 continuation.
class EnumerationTooShort : public Error {
 public:
  using Error::Error;
};

/// No schedule entry exists for the requested index.
class ScheduleMissing : public Error {
 public:
  using Error::Error;
};

/// The snake builder could not place target `target` within the growth budget.
class SchedulingFailure : public Error {
 public:
  SchedulingFailure(std::size_t target, const std::string& what)
      : Error(what), target_(target) {}

  std::size_t target() const noexcept { return target_; }

 private:
  std::size_t target_;
};

/// Malformed run configuration. `line` is 0 when the problem is not tied to a
/// specific line of the input.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, std::size_t line, const std::string& what)
      : Error(what), field_(std::move(field)), line_(line) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

}  // namespace seqhc
