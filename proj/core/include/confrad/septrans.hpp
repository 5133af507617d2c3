#pragma once

#include <utility>

#include "confrad/complex_plane.hpp"

namespace confrad {

// Power map straightening the sector {theta < arg w < theta + pi*alpha}
// onto the right half-plane:
//
//   w  ->  -i * (e^{-i theta} w)^{1/alpha}
//
// with the branch taking arg(e^{-i theta} w) in [0, pi*alpha], so the map is
// single valued on the closed sector. The lower edge lands on the negative
// imaginary semi-axis, the upper edge on the positive one.
struct SectorMap {
  int k = 0;           // index of the sector within its ray system
  double theta = 0.0;  // direction of the lower edge
  double alpha = 1.0;  // opening / pi, in (0, 2]
};

SectorMap make_sector_map(int k, double theta, double alpha);

Complex pi_apply(const SectorMap& s, Complex w);

// Images of the two edge points (a_k on the lower ray, a_next on the upper
// ray, checked to 1e-9 in angle). The results land on opposite imaginary
// semi-axes with |pi(a)| = |a|^{1/alpha} and gap equal to the sum of the
// two moduli; all three relations are re-verified to 1e-10.
std::pair<Complex, Complex> omega_points(const SectorMap& s, Complex a_k, Complex a_next);

// Local stretching factor of the map at an edge point a:
// lim |pi(w) - pi(a)| / |w - a| = (1/alpha) |a|^{1/alpha - 1}.
double distortion_factor(const SectorMap& s, Complex a);

// Max over sampled interior points with |w| in [1e-6, 1e-2] of
// | ln|pi(w)| - (1/alpha) ln|w| |. The power law is exact for this map, so
// the result is rounding noise (< 1e-9).
double origin_distortion_check(const SectorMap& s, int samples);

}  // namespace confrad
