#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rspin {

/// Process exit codes used by the command-line front end.
enum class ExitCode : int {
  ok = 0,
  usage = 2,
  range = 3,
  consistency = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept = 0;
};

/// The request is meaningless for the given inputs (bad parameters, mu for
/// odd r, empty moduli space, non-generating class lists, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::usage; }
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InvalidInput(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Genus below the range where the closed forms are known to hold.
class RangeError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::range; }
};

/// Two independent computations that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::consistency; }
};

}  // namespace rspin
