#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scl {

enum class ErrorCode {
  kUnknownGenerator,
  kMalformedCount,
  kIndexOutOfRange,
  kOddLength,
  kNotNull,
  kRadiusExhausted,
  kCapExceeded,
  kInvalidSpec,
  kInvalidAlphabet,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Resource limits, as opposed to malformed input.
  bool is_resource_limit() const noexcept {
    return code_ == ErrorCode::kRadiusExhausted || code_ == ErrorCode::kCapExceeded;
  }

 private:
  ErrorCode code_;
};

}  // namespace scl
