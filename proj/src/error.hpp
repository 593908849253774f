#pragma once

#include <stdexcept>
#include <string>

namespace concalc {

// Categories map one-to-one onto the C API status codes and CLI exit codes.
enum class ErrorKind {
  Input = 2,          // malformed input, parse failure, out-of-range argument
  Indeterminate = 3,  // result depends on a truncated computation
  Inconsistent = 4,   // mathematically inconsistent data
  Internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace concalc
