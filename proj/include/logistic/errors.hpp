#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logistic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller mistakes: inconsistent arguments, bad configuration, mismatched
// inputs. The CLI maps these to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public UsageError {
 public:
  using UsageError::UsageError;
};

class StructuralError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Mathematical failures of a formula or trajectory. The CLI maps these to
// exit status 3.
class MathError : public Error {
 public:
  using Error::Error;
};

class DomainError : public MathError {
 public:
  using MathError::MathError;
};

/// A denominator vanished. `where` is the time or step index at which it
/// happened.
class PoleError : public MathError {
 public:
  PoleError(const std::string& what, double where)
      : MathError(what), where_(where) {}
  double where() const noexcept { return where_; }

 private:
  double where_;
};

class EscapeError : public MathError {
 public:
  EscapeError(const std::string& what, std::size_t index)
      : MathError(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class DegeneracyError : public MathError {
 public:
  DegeneracyError(const std::string& what, std::size_t index)
      : MathError(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace logistic
