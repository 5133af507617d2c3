#pragma once

#include <span>
#include <vector>

#include "confrad/complex_plane.hpp"

namespace confrad {

// Ordered pole configuration: one point per ray from the origin, arguments
// strictly increasing over one turn. Canonical form has arg(points[0]) == 0;
// validate_ray_system rotates its input into that form.
//
// alpha[k] = (theta[k+1] - theta[k]) / pi with the last gap wrapping to
// theta[0] + 2*pi, so the alphas always sum to 2.
struct RaySystem {
  std::vector<Complex> points;
  std::vector<double> theta;
  std::vector<double> alpha;

  int n() const { return static_cast<int>(points.size()); }

  // cyclic access: alpha_at(-1) == alpha.back(), alpha_at(n()) == alpha[0]
  double alpha_at(int k) const {
    const int m = n();
    int i = k % m;
    if (i < 0) i += m;
    return alpha[static_cast<std::size_t>(i)];
  }
};

RaySystem validate_ray_system(std::span<const Complex> points);

RaySystem scaled(const RaySystem& rays, double factor);

}  // namespace confrad
