#pragma once

#include <optional>
#include <vector>

#include "confrad/domains.hpp"
#include "confrad/ray_system.hpp"

namespace confrad {

// A ray system with one canonical domain per pole, optionally a domain at
// the origin and one at infinity. Valid when every domain contains its pole
// and all present domains are pairwise disjoint as open sets.
struct Configuration {
  RaySystem rays;
  std::vector<CanonicalDomain> pole_domains;
  std::optional<CanonicalDomain> origin_domain;
  std::optional<CanonicalDomain> infinity_domain;  // must contain infinity
};

void validate_configuration(const Configuration& cfg);

Configuration scaled(const Configuration& cfg, double factor);

}  // namespace confrad
