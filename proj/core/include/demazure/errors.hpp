#pragma once

#include <stdexcept>
#include <string>

namespace demazure {

// Error taxonomy mirrors the CLI exit codes: validation -> 2,
// out-of-slice -> 3, insufficient precision -> 4.
enum class ErrorKind { validation, out_of_slice, precision };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

class OutOfSliceError : public Error {
public:
  explicit OutOfSliceError(const std::string& what) : Error(ErrorKind::out_of_slice, what) {}
};

class PrecisionError : public Error {
public:
  explicit PrecisionError(const std::string& what) : Error(ErrorKind::precision, what) {}
};

// Exact division failed; `remainder` describes the offending residue.
class NonDivisibleError : public ValidationError {
public:
  NonDivisibleError(const std::string& what, std::string remainder)
      : ValidationError(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

private:
  std::string remainder_;
};

}  // namespace demazure
