#pragma once

#include "confrad/complex_plane.hpp"
#include "confrad/domains.hpp"

namespace confrad {

// Fractional-linear map z -> (a z + b) / (c z + d) on the extended plane,
// stored with the determinant normalized to 1.
class MobiusMap {
 public:
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return MobiusMap(1.0, 0.0, 0.0, 1.0); }

  ExtComplex operator()(const ExtComplex& z) const;

  // (ad - bc) / (cz + d)^2 at a finite point; fails on the pole.
  Complex derivative(Complex z) const;

  MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

  // composition (*this) after inner: z -> (*this)(inner(z))
  MobiusMap compose_after(const MobiusMap& inner) const;

  // preimage of infinity
  ExtComplex pole() const;

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

 private:
  Complex a_, b_, c_, d_;
};

// The unique map sending one distinct triple to another. Either triple may
// contain the point at infinity once.
MobiusMap mobius_from_three_points(const ExtComplex& z1, const ExtComplex& z2, const ExtComplex& z3,
                                   const ExtComplex& w1, const ExtComplex& w2, const ExtComplex& w3);

// Image of a canonical domain. Fails with image_not_canonical when the
// map's pole falls on the domain boundary within numerical tolerance (the
// image would degenerate into a shape this family cannot represent
// reliably).
CanonicalDomain mobius_image(const CanonicalDomain& d, const MobiusMap& m);

}  // namespace confrad
