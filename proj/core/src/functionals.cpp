#include "confrad/functionals.hpp"

#include <cmath>

namespace confrad {

namespace {

// ln chi(e^x) = ln cosh(x), safe for large |x|
double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax - kLn2 + std::log1p(std::exp(-2.0 * ax));
}

}  // namespace

double chi(double t) {
  if (!(t > 0.0)) fail(Errc::non_positive_input, "chi needs a positive argument");
  return 0.5 * (t + 1.0 / t);
}

FunctionalValue l_gamma(const RaySystem& rays, double gamma) {
  if (gamma < 0.0) fail(Errc::precondition, "gamma must be nonnegative");
  const int n = rays.n();
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = rays.alpha[k];
    const double log_mod = std::log(std::abs(rays.points[k]));
    const double log_mod_next = std::log(std::abs(rays.points[(k + 1) % n]));
    const double x = (log_mod - log_mod_next) / (2.0 * a);
    acc += (1.0 - 0.5 * gamma * a * a) * log_cosh(x);
    acc += (1.0 + 0.25 * gamma * (a + rays.alpha_at(k - 1))) * log_mod;
  }
  return FunctionalValue::from_log(acc);
}

FunctionalValue j_gamma(const Configuration& cfg, double gamma) {
  if (gamma < 0.0) fail(Errc::precondition, "gamma must be nonnegative");
  if (!cfg.origin_domain) fail(Errc::missing_origin_domain, "j_gamma needs a domain at 0");
  if (cfg.infinity_domain)
    fail(Errc::precondition, "j_gamma takes no infinity domain");
  validate_configuration(cfg);
  double acc = gamma * std::log(inner_radius(*cfg.origin_domain, Complex{0.0}));
  for (int k = 0; k < cfg.rays.n(); ++k)
    acc += std::log(inner_radius(cfg.pole_domains[k], cfg.rays.points[k]));
  return FunctionalValue::from_log(acc);
}

FunctionalValue i_gamma(const Configuration& cfg, double gamma) {
  if (gamma < 0.0) fail(Errc::precondition, "gamma must be nonnegative");
  if (!cfg.origin_domain) fail(Errc::missing_origin_domain, "i_gamma needs a domain at 0");
  if (!cfg.infinity_domain) fail(Errc::missing_infinity_domain, "i_gamma needs a domain at infinity");
  validate_configuration(cfg);
  double acc = gamma * (std::log(inner_radius(*cfg.origin_domain, Complex{0.0})) +
                        std::log(inner_radius(*cfg.infinity_domain, ExtComplex::infinity())));
  for (int k = 0; k < cfg.rays.n(); ++k)
    acc += std::log(inner_radius(cfg.pole_domains[k], cfg.rays.points[k]));
  return FunctionalValue::from_log(acc);
}

FunctionalValue j3_invariant(const std::array<double, 3>& alphas,
                             const std::array<Complex, 3>& poles,
                             const std::array<CanonicalDomain, 3>& domains) {
  for (double a : alphas)
    if (a < 0.0) fail(Errc::precondition, "weights must be nonnegative");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(poles[i] - poles[j]) == 0.0)
        fail(Errc::coincident_poles, "the three poles must be distinct");
  for (int i = 0; i < 3; ++i) {
    if (!contains(domains[i], poles[i]))
      fail(Errc::pole_outside_domain, "domain misses its pole");
    for (int j = i + 1; j < 3; ++j)
      if (!domains_disjoint(domains[i], domains[j]))
        fail(Errc::disjointness_violated, "domains overlap as open sets");
  }

  double acc = 0.0;
  for (int i = 0; i < 3; ++i) acc += alphas[i] * std::log(inner_radius(domains[i], poles[i]));
  acc -= (alphas[0] + alphas[1] - alphas[2]) * std::log(std::abs(poles[0] - poles[1]));
  acc -= (alphas[0] - alphas[1] + alphas[2]) * std::log(std::abs(poles[0] - poles[2]));
  acc -= (-alphas[0] + alphas[1] + alphas[2]) * std::log(std::abs(poles[1] - poles[2]));
  return FunctionalValue::from_log(acc);
}

}  // namespace confrad
