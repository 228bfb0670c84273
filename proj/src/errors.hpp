#pragma once

#include <stdexcept>
#include <string>

namespace kinetic1d {

enum class ErrorCode {
  invalid_argument,
  no_approach,
  insufficient_data,
  parse_error,
  consistency_error,
  io_error,
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(std::string message) {
  throw Error(ErrorCode::invalid_argument, std::move(message));
}

}  // namespace kinetic1d
