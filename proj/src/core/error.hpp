#pragma once

#include <stdexcept>
#include <string>

namespace df {

// Error categories mirrored 1:1 by the C API status codes.
enum class ErrorCode {
  Io = 1,          // file missing / unreadable / unwritable
  Format = 2,      // malformed file contents (PNG, DFT1, JSON)
  Validation = 3,  // well-formed input violating an invariant
  Shape = 4,       // dimension / length mismatch between operands
  Domain = 5,      // argument outside its mathematical domain
  Usage = 6,       // bad command-line / option usage
  Internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace df
