#pragma once

#include <stdexcept>

namespace parkstat {

// An enumeration or input size exceeded its configured budget.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An unlucky car needed a coin flip but the supplied sequence ran out.
struct CoinsExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 0 raised to a negative exponent inside an exact rational power.
struct ZeroBaseNegativeExponentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two distributions over different supports were combined.
struct SupportMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace parkstat
