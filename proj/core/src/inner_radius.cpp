#include "confrad/inner_radius.hpp"

#include <cmath>

namespace confrad {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kDualPathTol = 1e-10;

}  // namespace

double inner_radius(const CanonicalDomain& d, Complex a) {
  validate_domain(d);
  return std::visit(
      overloaded{
          [&](const Disk& dk) {
            const double dist = std::abs(a - dk.center);
            if (dist >= dk.radius) fail(Errc::pole_outside_domain, "point not inside the disk");
            return (dk.radius * dk.radius - dist * dist) / dk.radius;
          },
          [&](const DiskExterior& de) {
            const double dist = std::abs(a - de.center);
            if (dist <= de.radius)
              fail(Errc::pole_outside_domain, "point not inside the disk exterior");
            return (dist * dist - de.radius * de.radius) / de.radius;
          },
          [&](const HalfPlane& hp) {
            const double depth = std::real(a * std::conj(hp.normal)) - hp.offset;
            if (depth <= 0.0) fail(Errc::pole_outside_domain, "point not inside the half-plane");
            return 2.0 * depth;
          },
      },
      d);
}

double inner_radius(const CanonicalDomain& d, const ExtComplex& a) {
  if (!a.is_infinite()) return inner_radius(d, a.value());
  validate_domain(d);
  if (const auto* de = std::get_if<DiskExterior>(&d)) return 1.0 / de->radius;
  fail(Errc::infinity_not_in_domain, "only a disk exterior contains infinity");
}

double transform_inner_radius(const CanonicalDomain& d, Complex a, const MobiusMap& m) {
  const double source = inner_radius(d, a);  // also checks a lies in d
  const ExtComplex image_point = m(ExtComplex(a));
  if (image_point.is_infinite())
    fail(Errc::precondition, "the image of the evaluation point must be finite");
  const CanonicalDomain image = mobius_image(d, m);
  const double direct = inner_radius(image, image_point.value());
  const double via_law = std::abs(m.derivative(a)) * source;
  if (std::abs(direct - via_law) > kDualPathTol * (1.0 + std::abs(direct)))
    fail(Errc::mismatch_beyond_tolerance,
         "closed-form image radius disagrees with the transformation law");
  return direct;
}

}  // namespace confrad
