#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace extcorr {

enum class ErrorKind {
  NotCoprime,
  InvalidInput,
  InvalidSplit,
  RangeError,
  NegativeDimension,
  NoStableBundles,
  BadSymmetry,
  LimitExceeded,
  Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace extcorr
