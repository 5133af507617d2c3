#include "confrad/septrans.hpp"

#include <cmath>

namespace confrad {

namespace {

constexpr double kEdgeAngleTol = 1e-12;  // acceptance slack at the sector edges
constexpr double kRayAngleTol = 1e-9;    // how close an edge point must sit on its ray
constexpr double kOmegaCheckTol = 1e-10;

}  // namespace

SectorMap make_sector_map(int k, double theta, double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) fail(Errc::precondition, "sector opening/pi must lie in (0, 2]");
  if (!std::isfinite(theta)) fail(Errc::precondition, "sector direction must be finite");
  return SectorMap{k, theta, alpha};
}

Complex pi_apply(const SectorMap& s, Complex w) {
  if (w == Complex{0.0}) fail(Errc::zero_input, "the sector map is singular at 0");
  const double span = kPi * s.alpha;
  double phi = wrap_2pi(std::arg(w) - s.theta);
  if (phi >= kTwoPi - kEdgeAngleTol) phi = 0.0;  // rounding wrapped a lower-edge point
  if (phi > span + kEdgeAngleTol) fail(Errc::outside_sector, "point outside the closed sector");

  const double log_mod = std::log(std::abs(w)) / s.alpha;
  const double mod = std::exp(log_mod);
  // exact boundary-to-boundary images on the two edges
  if (phi <= kEdgeAngleTol) return Complex{0.0, -mod};
  if (phi >= span - kEdgeAngleTol) return Complex{0.0, mod};
  // -i * exp((ln|w| + i phi) / alpha)
  return Complex{0.0, -1.0} * std::polar(mod, phi / s.alpha);
}

std::pair<Complex, Complex> omega_points(const SectorMap& s, Complex a_k, Complex a_next) {
  if (a_k == Complex{0.0} || a_next == Complex{0.0})
    fail(Errc::zero_input, "edge points must be nonzero");
  if (std::abs(wrap_pm_pi(std::arg(a_k) - s.theta)) > kRayAngleTol)
    fail(Errc::off_ray, "first point is not on the lower edge ray");
  if (std::abs(wrap_pm_pi(std::arg(a_next) - (s.theta + kPi * s.alpha))) > kRayAngleTol)
    fail(Errc::off_ray, "second point is not on the upper edge ray");

  // snap onto the exact rays, then map; at a full opening the two edge rays
  // coincide and pi_apply's branch would fold the upper edge onto the lower
  // one, so the upper image (the boundary value from inside the sector) is
  // formed directly there
  const Complex w1 = pi_apply(s, std::polar(std::abs(a_k), s.theta));
  const Complex w2 = s.alpha < 2.0 - 1e-12
                         ? pi_apply(s, std::polar(std::abs(a_next), s.theta + kPi * s.alpha))
                         : Complex{0.0, std::exp(std::log(std::abs(a_next)) / s.alpha)};

  const double m1 = std::pow(std::abs(a_k), 1.0 / s.alpha);
  const double m2 = std::pow(std::abs(a_next), 1.0 / s.alpha);
  const bool ok = std::abs(std::abs(w1) - m1) <= kOmegaCheckTol * (1.0 + m1) &&
                  std::abs(std::abs(w2) - m2) <= kOmegaCheckTol * (1.0 + m2) &&
                  std::abs(std::abs(w1 - w2) - (m1 + m2)) <= kOmegaCheckTol * (1.0 + m1 + m2);
  if (!ok)
    fail(Errc::mismatch_beyond_tolerance, "edge images violate the modulus power law");
  return {w1, w2};
}

double distortion_factor(const SectorMap& s, Complex a) {
  if (a == Complex{0.0}) fail(Errc::zero_input, "edge point must be nonzero");
  const bool on_lower = std::abs(wrap_pm_pi(std::arg(a) - s.theta)) <= kRayAngleTol;
  const bool on_upper =
      std::abs(wrap_pm_pi(std::arg(a) - (s.theta + kPi * s.alpha))) <= kRayAngleTol;
  if (!on_lower && !on_upper) fail(Errc::off_ray, "point is not on a sector edge");
  return (1.0 / s.alpha) * std::pow(std::abs(a), 1.0 / s.alpha - 1.0);
}

double origin_distortion_check(const SectorMap& s, int samples) {
  if (samples < 1) fail(Errc::precondition, "need at least one sample");
  constexpr double kFractions[] = {0.5, 0.25, 0.75};  // interior phases, as fractions of the opening
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double expo = samples == 1 ? -2.0 : -2.0 - 4.0 * i / (samples - 1);  // |w| from 1e-2 to 1e-6
    const double mod = std::pow(10.0, expo);
    const double frac = kFractions[i % 3];
    const Complex w = std::polar(mod, s.theta + frac * kPi * s.alpha);
    const double err = std::abs(std::log(std::abs(pi_apply(s, w))) - std::log(mod) / s.alpha);
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace confrad
