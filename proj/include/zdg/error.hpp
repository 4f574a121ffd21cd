#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdg {

// Base of every error raised by the library. kind() is a short stable token
// used by the CLI for its one-line machine-parsable diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  const char* kind() const noexcept override { return "parse_error"; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_argument"; }
};

class CapExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "cap_exceeded"; }
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double residual)
      : Error(message), residual_(residual) {}
  const char* kind() const noexcept override { return "no_convergence"; }
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class VerificationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "verification_failed"; }
};

}  // namespace zdg
