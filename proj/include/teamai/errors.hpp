#ifndef TEAMAI_ERRORS_HPP
#define TEAMAI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace teamai {

// Machine-checkable failure categories. Every throwing operation in the
// library raises Error with one of these codes; the CLI maps ConfigError
// and IoError to exit code 2.
enum class Errc {
  NonMonotone,       // success probabilities not strictly increasing
  NonComplementary,  // probability increments not strictly increasing
  BadCost,           // effort cost must be positive
  BadLength,         // probability vector length / team size mismatch
  OutOfRange,        // replacement probability outside [0,1]
  CapacityExceeded,  // sum of replacement probabilities above capacity
  FullyReplaced,     // quantity undefined for a worker with x_i = 1
  Degenerate,        // off-path rate undefined when x_i + x_{i-1} = 1
  Boundary,          // gradient requested at a point with some x_k = 1
  WrongSize,         // operation requires a specific team size
  BadAlpha,          // production parameter outside (0,1)
  BadCapacity,       // capacity outside the admissible interval
  BadRange,          // malformed sweep range
  IoError,
  ConfigError,
  UnknownSuite,
  InconsistentWages,  // wage schedule does not match the strategy
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace teamai

#endif  // TEAMAI_ERRORS_HPP
