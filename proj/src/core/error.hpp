#pragma once

#include <stdexcept>
#include <string>

namespace cl8 {

// Mirrors the cl8_status codes of the C API one to one.
enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  RingMismatch = 3,
  GeneratorMismatch = 4,
  NotInIdeal = 5,
  PreconditionViolation = 6,
  DecompositionFailure = 7,
  NotInFiber = 8,
  InvarianceFailure = 9,
  RetractionFailure = 10,
  UnknownSection = 11,
  Config = 12,
  Internal = 13,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cl8
