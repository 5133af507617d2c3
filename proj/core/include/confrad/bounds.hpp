#pragma once

#include <cstdint>
#include <vector>

#include "confrad/functional_value.hpp"

namespace confrad {

// The two closed-form bound families. theorem1 keeps the origin weight
// gamma free in (0, 1]; theorem2 is the 0/infinity-symmetric variant with
// the weight fixed at 1/2.
enum class BoundKind { theorem1, theorem2 };

// Sharp three-domain bound profiles and their logarithmic derivatives.
// psi1 lives on [0, 2] (0 at beta = 0, 1 in the limit beta -> 2), psi2 on
// (0, sqrt(2)] with a removable singularity at beta = 1. All evaluation is
// done in log space.
double psi1(double beta);
double log_psi1(double beta);  // beta in (0, 2]
double psi2(double beta);
double log_psi2(double beta);

// F = (ln psi)' in closed form. f1 on (0, 2); f2 on (0, sqrt(2)) excluding
// the point beta = 1, where the derivative's closed form is singular.
double f1(double beta);
double f2(double beta);

// f1(beta) - f1(2 - beta) on (0, 1]; zero at beta = 1, positive below it.
double frak_f(double beta);

// Unique minimizer of F on its domain, located by bisecting the sign change
// of F' to a bracket narrower than 1e-10.
double find_beta0(BoundKind kind);

// Closed-form bounds for the two product functionals under the unit ray
// constraint, in log space:
//
//   bound_thm1(n, gamma) = 4^{n + gamma/n} gamma^{gamma/n} n^n
//                          / (n^2 - gamma)^{n + gamma/n}
//                          * ((n - sqrt(gamma)) / (n + sqrt(gamma)))^{2 sqrt(gamma)}
//
//   bound_thm2(n) = 2^{2n + 1/n} / (n^2 - 2)^{1/n + n/2}
//                   * ((n - sqrt(2)) / (n + sqrt(2)))^{sqrt(2)}
FunctionalValue bound_thm1(int n, double gamma);  // n >= 2, 0 < gamma <= 1
FunctionalValue bound_thm2(int n);                // n >= 2

// Relative discrepancy between the closed-form bound and its factorization
// through the normalized profile at the symmetric point:
//
//   bound = (2/n)^n * (psi1(beta) / beta^2)^{n/2},      beta = 2 sqrt(gamma) / n
//   bound = (2/n)^n * (psi2(beta) / (2 beta^2))^{n/2},  beta = sqrt(2) / n
//
// Dividing out the beta powers makes both profiles tend to 4, the sharp
// two-domain constant, as beta -> 0; with that normalization the identity is
// exact and the returned discrepancy stays below 1e-10. gamma is ignored for
// theorem2.
double check_symmetric_identity(BoundKind kind, int n, double gamma = 0.5);

struct ExtremalSolution {
  std::vector<double> betas;  // ascending
  double objective_log = 0.0;
  double lagrange_residual = 0.0;  // max_k |F(beta_k) - F(beta_1)|
  bool certified_symmetric = false;
  bool converged = true;
};

struct SolveOptions {
  int starts = 64;
  std::uint64_t seed = 0xC0FFEEULL;
  int max_sweeps = 200;
};

// Maximize sum_k ln psi(beta_k) over the open simplex
// {beta_k > 0, sum beta_k = budget} by multistart pairwise coordinate
// ascent (scan + golden section per pair). budget must fit inside n times
// the psi domain. Corners are kept away by an interior margin of 1e-8.
// certified_symmetric is set when the best point is within 1e-6 of the
// uniform split and no start beat the uniform objective by more than 1e-9.
ExtremalSolution solve_product_max(BoundKind kind, int n, double budget,
                                   const SolveOptions& opts = {});

}  // namespace confrad
