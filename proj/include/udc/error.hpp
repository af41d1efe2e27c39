#pragma once

#include <stdexcept>
#include <string>

namespace udc {

// Mirrors udc_status in udc.h (minus UDC_OK).
enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  not_decodable = 3,
  io = 4,
  format = 5,
  uncorrectable = 6,
  too_large = 7,
  internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace udc
