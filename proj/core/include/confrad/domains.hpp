#pragma once

#include <variant>

#include "confrad/complex_plane.hpp"

namespace confrad {

// The three canonical domain shapes. They admit exact inner radii and are
// closed under fractional-linear maps, which is all the toolkit needs.

struct Disk {  // {z : |z - center| < radius}
  Complex center;
  double radius = 1.0;
};

struct DiskExterior {  // {z : |z - center| > radius}, contains infinity
  Complex center;
  double radius = 1.0;
};

struct HalfPlane {  // {z : Re(z * conj(normal)) > offset}, |normal| == 1
  Complex normal{1.0, 0.0};
  double offset = 0.0;
};

using CanonicalDomain = std::variant<Disk, DiskExterior, HalfPlane>;

// Builds a half-plane from a not-necessarily-unit normal.
HalfPlane make_half_plane(Complex normal, double offset);

void validate_domain(const CanonicalDomain& d);

bool contains(const CanonicalDomain& d, Complex z);
bool contains(const CanonicalDomain& d, const ExtComplex& z);
bool contains_infinity(const CanonicalDomain& d);

// Open-set disjointness; tangent boundaries count as disjoint.
bool domains_disjoint(const CanonicalDomain& a, const CanonicalDomain& b);

CanonicalDomain scaled(const CanonicalDomain& d, double factor);

}  // namespace confrad
