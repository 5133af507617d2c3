#include "confrad/ray_system.hpp"

#include <cmath>

#include "confrad/errors.hpp"

namespace confrad {

RaySystem validate_ray_system(std::span<const Complex> points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) fail(Errc::precondition, "a ray system needs at least two points");

  std::vector<double> mods(n), raw(n);
  for (int k = 0; k < n; ++k) {
    const Complex z = points[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(Errc::precondition, "ray-system points must be finite");
    mods[k] = std::abs(z);
    if (mods[k] == 0.0) fail(Errc::zero_modulus, "ray-system point at the origin");
    raw[k] = arg_in_2pi(z);
  }

  RaySystem rs;
  rs.theta.resize(n);
  rs.theta[0] = 0.0;  // canonical form: first point rotated onto the positive real axis
  for (int k = 1; k < n; ++k) {
    double d = raw[k] - raw[0];
    if (d < 0.0) d += kTwoPi;
    rs.theta[k] = d;
    if (!(rs.theta[k] > rs.theta[k - 1]))
      fail(Errc::non_monotone_angles, "arguments must increase strictly over one turn");
  }
  if (!(rs.theta[n - 1] < kTwoPi))
    fail(Errc::non_monotone_angles, "arguments must stay within one turn");

  rs.points.resize(n);
  for (int k = 0; k < n; ++k) rs.points[k] = std::polar(mods[k], rs.theta[k]);

  rs.alpha.resize(n);
  for (int k = 0; k + 1 < n; ++k) rs.alpha[k] = (rs.theta[k + 1] - rs.theta[k]) / kPi;
  rs.alpha[n - 1] = (kTwoPi - rs.theta[n - 1]) / kPi;

  double sum = 0.0;
  for (double a : rs.alpha) sum += a;
  if (std::abs(sum - 2.0) > 1e-12)
    fail(Errc::precondition, "normalized gaps failed to sum to 2");

  return rs;
}

RaySystem scaled(const RaySystem& rays, double factor) {
  if (!(factor > 0.0)) fail(Errc::non_positive_input, "scale factor must be positive");
  RaySystem out = rays;
  for (auto& p : out.points) p *= factor;
  return out;
}

}  // namespace confrad
