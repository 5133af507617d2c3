#pragma once

#include "confrad/domains.hpp"
#include "confrad/mobius.hpp"

namespace confrad {

// Conformal (inner) radius r(B, a) of a canonical domain at a point of it.
//
//   disk {|z-c| < rho} at a:          (rho^2 - |a-c|^2) / rho
//   exterior {|z-c| > rho} at a:      (|a-c|^2 - rho^2) / rho
//   exterior at infinity:             1 / rho
//   half-plane at a:                  2 * dist(a, boundary)
//
// The value at infinity follows the Green's function normalization
// g(z, inf) = ln|z| + ln r + o(1); it is the unique choice under which the
// weighted functionals of this toolkit scale consistently with their ray
// constraint, so the normalized inequalities are scale invariant.
double inner_radius(const CanonicalDomain& d, Complex a);
double inner_radius(const CanonicalDomain& d, const ExtComplex& a);

// Inner radius of the image m(d) at m(a), computed two ways: from the image
// domain's closed form and from the transformation law
// r(m(B), m(a)) = |m'(a)| r(B, a). The paths must agree to 1e-10; a
// mismatch signals an implementation bug and throws.
double transform_inner_radius(const CanonicalDomain& d, Complex a, const MobiusMap& m);

}  // namespace confrad
