#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "confrad/errors.hpp"

namespace confrad {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kLn2 = std::numbers::ln2;
inline const double kSqrt2 = std::sqrt(2.0);

// Point of the extended plane: a finite complex value or the point at
// infinity. Infinity is an explicit tag, never encoded as large floats.
class ExtComplex {
 public:
  ExtComplex() = default;
  ExtComplex(Complex z) : z_(z) {}  // NOLINT: implicit on purpose
  ExtComplex(double x) : z_(x, 0.0) {}

  static ExtComplex infinity() {
    ExtComplex p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }

  Complex value() const {
    if (infinite_) fail(Errc::precondition, "finite value requested for the point at infinity");
    return z_;
  }

  friend bool operator==(const ExtComplex& a, const ExtComplex& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.z_ == b.z_;
  }

 private:
  Complex z_{0.0, 0.0};
  bool infinite_ = false;
};

// arg mapped to [0, 2*pi)
inline double arg_in_2pi(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// wrap an angle difference to [-pi, pi]
inline double wrap_pm_pi(double x) { return std::remainder(x, kTwoPi); }

// wrap an angle to [0, 2*pi)
inline double wrap_2pi(double x) {
  double a = std::fmod(x, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

}  // namespace confrad
