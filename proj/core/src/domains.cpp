#include "confrad/domains.hpp"

#include <cmath>

namespace confrad {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kUnitNormalTol = 1e-12;
constexpr double kAntiparallelTol = 1e-12;

}  // namespace

HalfPlane make_half_plane(Complex normal, double offset) {
  const double len = std::abs(normal);
  if (len == 0.0) fail(Errc::invalid_domain, "half-plane normal must be nonzero");
  return HalfPlane{normal / len, offset / len};
}

void validate_domain(const CanonicalDomain& d) {
  std::visit(overloaded{
                 [](const Disk& dk) {
                   if (!(dk.radius > 0.0) || !std::isfinite(dk.radius))
                     fail(Errc::invalid_domain, "disk radius must be positive");
                 },
                 [](const DiskExterior& de) {
                   if (!(de.radius > 0.0) || !std::isfinite(de.radius))
                     fail(Errc::invalid_domain, "disk-exterior radius must be positive");
                 },
                 [](const HalfPlane& hp) {
                   if (std::abs(std::abs(hp.normal) - 1.0) > kUnitNormalTol)
                     fail(Errc::invalid_domain, "half-plane normal must be unit length");
                 },
             },
             d);
}

bool contains(const CanonicalDomain& d, Complex z) {
  return std::visit(
      overloaded{
          [&](const Disk& dk) { return std::abs(z - dk.center) < dk.radius; },
          [&](const DiskExterior& de) { return std::abs(z - de.center) > de.radius; },
          [&](const HalfPlane& hp) { return std::real(z * std::conj(hp.normal)) > hp.offset; },
      },
      d);
}

bool contains_infinity(const CanonicalDomain& d) {
  return std::holds_alternative<DiskExterior>(d);
}

bool contains(const CanonicalDomain& d, const ExtComplex& z) {
  if (z.is_infinite()) return contains_infinity(d);
  return contains(d, z.value());
}

bool domains_disjoint(const CanonicalDomain& a, const CanonicalDomain& b) {
  return std::visit(
      overloaded{
          [](const Disk& x, const Disk& y) {
            return std::abs(x.center - y.center) >= x.radius + y.radius;
          },
          [](const Disk& x, const DiskExterior& y) {
            return std::abs(x.center - y.center) + x.radius <= y.radius;
          },
          [](const DiskExterior& x, const Disk& y) {
            return std::abs(x.center - y.center) + y.radius <= x.radius;
          },
          [](const Disk& x, const HalfPlane& y) {
            return std::real(x.center * std::conj(y.normal)) + x.radius <= y.offset;
          },
          [](const HalfPlane& x, const Disk& y) {
            return std::real(y.center * std::conj(x.normal)) + y.radius <= x.offset;
          },
          // two exteriors both contain a neighborhood of infinity
          [](const DiskExterior&, const DiskExterior&) { return false; },
          // an exterior and a half-plane both reach arbitrarily far out
          [](const DiskExterior&, const HalfPlane&) { return false; },
          [](const HalfPlane&, const DiskExterior&) { return false; },
          [](const HalfPlane& x, const HalfPlane& y) {
            if (std::abs(x.normal + y.normal) > kAntiparallelTol) return false;
            return x.offset + y.offset >= 0.0;
          },
      },
      a, b);
}

CanonicalDomain scaled(const CanonicalDomain& d, double factor) {
  if (!(factor > 0.0)) fail(Errc::non_positive_input, "scale factor must be positive");
  return std::visit(
      overloaded{
          [&](const Disk& dk) -> CanonicalDomain {
            return Disk{dk.center * factor, dk.radius * factor};
          },
          [&](const DiskExterior& de) -> CanonicalDomain {
            return DiskExterior{de.center * factor, de.radius * factor};
          },
          [&](const HalfPlane& hp) -> CanonicalDomain {
            return HalfPlane{hp.normal, hp.offset * factor};
          },
      },
      d);
}

}  // namespace confrad
