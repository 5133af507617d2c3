#include "confrad/mobius.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace confrad {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kDetTol = 1e-14;
constexpr double kCoincidenceTol = 1e-14;
constexpr double kBoundaryDegenTol = 1e-12;

bool is_zero(Complex z) { return z.real() == 0.0 && z.imag() == 0.0; }

// 2x2 matrix acting as a fractional-linear map; row-major {a, b, c, d}.
using Mat = std::array<Complex, 4>;

Mat mat_mul(const Mat& m, const Mat& n) {
  return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
          m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
}

Mat adjugate(const Mat& m) { return {m[3], -m[1], -m[2], m[0]}; }

// Matrix of the map sending the distinct triple (z1, z2, z3) to (0, 1, inf).
Mat to_zero_one_inf(const ExtComplex& z1, const ExtComplex& z2, const ExtComplex& z3) {
  if (z1.is_infinite()) {
    const Complex p2 = z2.value(), p3 = z3.value();
    return {Complex{0.0}, p2 - p3, Complex{1.0}, -p3};
  }
  if (z2.is_infinite()) {
    const Complex p1 = z1.value(), p3 = z3.value();
    return {Complex{1.0}, -p1, Complex{1.0}, -p3};
  }
  if (z3.is_infinite()) {
    const Complex p1 = z1.value(), p2 = z2.value();
    return {Complex{1.0}, -p1, Complex{0.0}, p2 - p1};
  }
  const Complex p1 = z1.value(), p2 = z2.value(), p3 = z3.value();
  return {p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1)};
}

void check_distinct(const ExtComplex& x, const ExtComplex& y) {
  if (x.is_infinite() || y.is_infinite()) {
    if (x.is_infinite() && y.is_infinite())
      fail(Errc::degenerate_triple, "triple contains infinity twice");
    return;
  }
  const Complex a = x.value(), b = y.value();
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a - b) <= kCoincidenceTol * scale)
    fail(Errc::degenerate_triple, "triple contains coincident points");
}

}  // namespace

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  const double scale = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
  const Complex det = a_ * d_ - b_ * c_;
  if (!(scale > 0.0) || !std::isfinite(scale) || std::abs(det) <= kDetTol * scale * scale)
    fail(Errc::degenerate_map, "coefficients have (numerically) vanishing determinant");
  const Complex s = std::sqrt(det);
  a_ /= s;
  b_ /= s;
  c_ /= s;
  d_ /= s;
}

ExtComplex MobiusMap::operator()(const ExtComplex& z) const {
  if (z.is_infinite()) {
    if (is_zero(c_)) return ExtComplex::infinity();
    return ExtComplex(a_ / c_);
  }
  const Complex w = z.value();
  const Complex den = c_ * w + d_;
  if (is_zero(den)) return ExtComplex::infinity();
  return ExtComplex((a_ * w + b_) / den);
}

Complex MobiusMap::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  if (is_zero(den)) fail(Errc::pole_at_point, "derivative requested at the map's pole");
  return (a_ * d_ - b_ * c_) / (den * den);
}

MobiusMap MobiusMap::compose_after(const MobiusMap& inner) const {
  const Mat m = mat_mul({a_, b_, c_, d_}, {inner.a_, inner.b_, inner.c_, inner.d_});
  return MobiusMap(m[0], m[1], m[2], m[3]);
}

ExtComplex MobiusMap::pole() const {
  if (is_zero(c_)) return ExtComplex::infinity();
  return ExtComplex(-d_ / c_);
}

MobiusMap mobius_from_three_points(const ExtComplex& z1, const ExtComplex& z2, const ExtComplex& z3,
                                   const ExtComplex& w1, const ExtComplex& w2, const ExtComplex& w3) {
  check_distinct(z1, z2);
  check_distinct(z1, z3);
  check_distinct(z2, z3);
  check_distinct(w1, w2);
  check_distinct(w1, w3);
  check_distinct(w2, w3);
  const Mat s = to_zero_one_inf(z1, z2, z3);
  const Mat t = to_zero_one_inf(w1, w2, w3);
  const Mat m = mat_mul(adjugate(t), s);
  return MobiusMap(m[0], m[1], m[2], m[3]);
}

namespace {

Complex apply_finite(const MobiusMap& m, Complex z) {
  const ExtComplex w = m(ExtComplex(z));
  if (w.is_infinite()) fail(Errc::image_not_canonical, "boundary sample point maps to infinity");
  return w.value();
}

// Half-plane through the image line given by a point and a direction; the
// side is fixed by the image of an interior probe point.
CanonicalDomain half_plane_from_boundary(Complex on_line, Complex direction, Complex probe_image) {
  const double len = std::abs(direction);
  if (len == 0.0) fail(Errc::image_not_canonical, "image line direction vanished");
  Complex normal = Complex(0.0, -1.0) * (direction / len);
  double offset = std::real(on_line * std::conj(normal));
  if (std::real(probe_image * std::conj(normal)) < offset) {
    normal = -normal;
    offset = -offset;
  }
  return make_half_plane(normal, offset);
}

struct CircleImage {
  Complex center;
  double radius;
};

// Image of the circle |z - c0| = rho under w = E + F / (z - p), valid when
// the pole p is off the circle.
CircleImage circle_through_inversion(Complex c0, double rho, Complex p, Complex E, Complex F) {
  const Complex q = c0 - p;
  const double s = std::norm(q) - rho * rho;
  return {E + F * std::conj(q) / s, std::abs(F) * rho / std::abs(s)};
}

}  // namespace

CanonicalDomain mobius_image(const CanonicalDomain& d, const MobiusMap& m) {
  validate_domain(d);
  const Complex A = m.a(), B = m.b(), C = m.c(), D = m.d();
  const bool affine = is_zero(C);
  // w = E + F / (z - p) when C != 0
  const Complex p = affine ? Complex{0.0} : -D / C;
  const Complex E = affine ? Complex{0.0} : A / C;
  const Complex F = affine ? Complex{0.0} : (B * C - A * D) / (C * C);

  return std::visit(
      overloaded{
          [&](const Disk& dk) -> CanonicalDomain {
            if (affine) {
              const Complex lin = A / D;
              return Disk{(A * dk.center + B) / D, std::abs(lin) * dk.radius};
            }
            const double dist = std::abs(p - dk.center);
            if (std::abs(dist - dk.radius) <=
                kBoundaryDegenTol * std::max({1.0, dk.radius, std::abs(p)}))
              fail(Errc::image_not_canonical, "map pole (numerically) on the disk boundary");
            const CircleImage ci = circle_through_inversion(dk.center, dk.radius, p, E, F);
            if (dist > dk.radius) return Disk{ci.center, ci.radius};
            return DiskExterior{ci.center, ci.radius};  // pole inside: image contains infinity
          },
          [&](const DiskExterior& de) -> CanonicalDomain {
            if (affine) {
              const Complex lin = A / D;
              return DiskExterior{(A * de.center + B) / D, std::abs(lin) * de.radius};
            }
            const double dist = std::abs(p - de.center);
            if (std::abs(dist - de.radius) <=
                kBoundaryDegenTol * std::max({1.0, de.radius, std::abs(p)}))
              fail(Errc::image_not_canonical, "map pole (numerically) on the disk boundary");
            const CircleImage ci = circle_through_inversion(de.center, de.radius, p, E, F);
            if (dist > de.radius) return DiskExterior{ci.center, ci.radius};  // pole in the exterior
            return Disk{ci.center, ci.radius};
          },
          [&](const HalfPlane& hp) -> CanonicalDomain {
            const Complex nu = hp.normal;
            const Complex foot = hp.offset * nu;      // boundary point nearest the origin
            const Complex tau = Complex(0.0, 1.0) * nu;  // along the boundary line
            if (affine) {
              const Complex w0 = (A * foot + B) / D;
              const Complex dir = A * tau / D;
              const Complex probe = apply_finite(m, foot + nu);
              return half_plane_from_boundary(w0, dir, probe);
            }
            const double sd = std::real(p * std::conj(nu)) - hp.offset;  // signed pole distance
            const double scale = std::max({1.0, std::abs(p), std::abs(hp.offset)});
            if (std::abs(sd) <= kBoundaryDegenTol * scale) {
              // pole on the boundary line: the line maps to a line
              const double tp = std::real((p - foot) * std::conj(tau));
              const double span = std::max(1.0, std::abs(tp));
              const Complex w1 = apply_finite(m, foot + (tp + span) * tau);
              const Complex w2 = apply_finite(m, foot + (tp - span) * tau);
              const Complex probe = apply_finite(m, p + std::max(1.0, std::abs(p)) * nu);
              return half_plane_from_boundary(w1, w2 - w1, probe);
            }
            // in coordinates u = z - p the boundary is {Re(u conj(nu)) = -sd};
            // 1/u maps it to the circle with diameter from 0 to -conj(nu)/sd
            const double k = -sd;
            const Complex center = E + F * std::conj(nu) / (2.0 * k);
            const double radius = std::abs(F) / (2.0 * std::abs(k));
            if (sd > 0.0) return DiskExterior{center, radius};  // pole inside the half-plane
            return Disk{center, radius};
          },
      },
      d);
}

}  // namespace confrad
