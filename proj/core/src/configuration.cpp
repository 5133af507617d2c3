#include "confrad/configuration.hpp"

#include <string>

namespace confrad {

void validate_configuration(const Configuration& cfg) {
  const int n = cfg.rays.n();
  if (static_cast<int>(cfg.pole_domains.size()) != n)
    fail(Errc::precondition, "one pole domain required per ray-system point");

  for (int k = 0; k < n; ++k) {
    validate_domain(cfg.pole_domains[k]);
    if (!contains(cfg.pole_domains[k], cfg.rays.points[k]))
      fail(Errc::pole_outside_domain, "pole domain " + std::to_string(k) + " misses its pole");
  }
  if (cfg.origin_domain) {
    validate_domain(*cfg.origin_domain);
    if (!contains(*cfg.origin_domain, Complex{0.0}))
      fail(Errc::pole_outside_domain, "origin domain misses 0");
  }
  if (cfg.infinity_domain) {
    validate_domain(*cfg.infinity_domain);
    if (!contains_infinity(*cfg.infinity_domain))
      fail(Errc::infinity_not_in_domain, "infinity domain must be a disk exterior");
  }

  std::vector<const CanonicalDomain*> all;
  all.reserve(cfg.pole_domains.size() + 2);
  if (cfg.origin_domain) all.push_back(&*cfg.origin_domain);
  for (const auto& d : cfg.pole_domains) all.push_back(&d);
  if (cfg.infinity_domain) all.push_back(&*cfg.infinity_domain);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (!domains_disjoint(*all[i], *all[j]))
        fail(Errc::disjointness_violated, "domains overlap as open sets");
}

Configuration scaled(const Configuration& cfg, double factor) {
  Configuration out;
  out.rays = scaled(cfg.rays, factor);
  out.pole_domains.reserve(cfg.pole_domains.size());
  for (const auto& d : cfg.pole_domains) out.pole_domains.push_back(scaled(d, factor));
  if (cfg.origin_domain) out.origin_domain = scaled(*cfg.origin_domain, factor);
  if (cfg.infinity_domain) out.infinity_domain = scaled(*cfg.infinity_domain, factor);
  return out;
}

}  // namespace confrad
