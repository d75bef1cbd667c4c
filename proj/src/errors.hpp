#pragma once

#include <stdexcept>
#include <string>

namespace pwiscore {

enum class ErrorCode {
  InvalidArgument,  // bad configuration, degenerate input, dimension mismatch
  Parse,            // malformed CSV/JSON input
  Incompatible,     // no compatible value function (infeasible or eta* <= 0)
  Solver,           // iteration/node limit, unbounded where boundedness is required
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pwiscore
