#pragma once

#include <cmath>

#include "confrad/errors.hpp"

namespace confrad {

// Positive quantity carried together with its natural logarithm, so that
// long products and large exponents never under- or overflow.
struct FunctionalValue {
  double value = 1.0;
  double log_value = 0.0;

  static FunctionalValue from_log(double log_value) {
    return FunctionalValue{std::exp(log_value), log_value};
  }

  static FunctionalValue from_value(double value) {
    if (!(value > 0.0)) fail(Errc::non_positive_input, "functional value must be positive");
    return FunctionalValue{value, std::log(value)};
  }
};

}  // namespace confrad
