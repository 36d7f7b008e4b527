#include "extcorr/error.hpp"

#include "extcorr/checked.hpp"

namespace extcorr {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidSplit: return "InvalidSplit";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::NoStableBundles: return "NoStableBundles";
    case ErrorKind::BadSymmetry: return "BadSymmetry";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

namespace checked {

void overflow(const char* op) {
  throw Error(ErrorKind::Overflow,
              std::string("64-bit integer overflow in ") + op);
}

BezoutResult extended_euclid(Int a, Int b) {
  if (a < 0 || b < 0) {
    throw Error(ErrorKind::InvalidInput, "extended_euclid: negative argument");
  }
  // Invariant: old_r = a*old_x + b*old_y, r = a*x + b*y.
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = sub(old_r, mul(q, r));
    std::swap(old_r, r);
    old_x = sub(old_x, mul(q, x));
    std::swap(old_x, x);
    old_y = sub(old_y, mul(q, y));
    std::swap(old_y, y);
  }
  return {old_r, old_x, old_y};
}

}  // namespace checked
}  // namespace extcorr
