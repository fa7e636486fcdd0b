#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frcheck {

enum class ErrorCode {
  NotCubic,
  LoopEdge,
  OddOrder,
  InvalidEdge,
  MalformedRecord,
  SimpleFormatOnMultigraph,
  LimitExceeded,
  MixedGraphs,
  InvalidFrequencySpec,
  InvalidCut,
  FrequencyMismatch,
  MixedSplit,
  UnknownName,
  BadParameter,
  NotBridgeless,
  Disconnected,
  Timeout,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library. The code is what callers branch on;
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(std::size_t limit)
      : Error(ErrorCode::LimitExceeded,
              "more than " + std::to_string(limit) + " perfect matchings"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace frcheck
