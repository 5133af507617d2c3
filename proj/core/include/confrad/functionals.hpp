#pragma once

#include <array>

#include "confrad/configuration.hpp"
#include "confrad/functional_value.hpp"
#include "confrad/inner_radius.hpp"

namespace confrad {

// chi(t) = (t + 1/t) / 2 for t > 0; >= 1 with equality only at t = 1.
double chi(double t);

// Weighted product over the ray system:
//
//   prod_k chi(|a_k / a_{k+1}|^{1/(2 alpha_k)})^{1 - gamma alpha_k^2 / 2}
//   * prod_k |a_k|^{1 + gamma (alpha_k + alpha_{k-1}) / 4}
//
// with cyclic indices (a_{n+1} = a_1, alpha_0 = alpha_n). Accumulated in log
// space. Homogeneous of degree n + gamma under scaling of the points.
FunctionalValue l_gamma(const RaySystem& rays, double gamma);

// r(B_0, 0)^gamma * prod_k r(B_k, a_k). Needs an origin domain and no
// infinity domain; the configuration is re-validated.
FunctionalValue j_gamma(const Configuration& cfg, double gamma);

// [r(B_0, 0) r(B_inf, inf)]^gamma * prod_k r(B_k, a_k). Needs both an origin
// and an infinity domain.
FunctionalValue i_gamma(const Configuration& cfg, double gamma);

// Three-domain functional invariant under fractional-linear maps:
//
//   prod_k r^{alpha_k}(B_k, a_k)
//   / ( |a1-a2|^{a1+a2-a3} |a1-a3|^{a1-a2+a3} |a2-a3|^{-a1+a2+a3} )
//
// (exponents written with a_k for alpha_k). Poles must be distinct and
// finite, domains pairwise disjoint, each containing its pole.
FunctionalValue j3_invariant(const std::array<double, 3>& alphas,
                             const std::array<Complex, 3>& poles,
                             const std::array<CanonicalDomain, 3>& domains);

}  // namespace confrad
