#include "confrad/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "confrad/complex_plane.hpp"
#include "confrad/rng.hpp"

namespace confrad {

namespace {

constexpr double kInteriorMargin = 1e-8;
constexpr double kGoldenWidth = 1e-12;
constexpr double kSweepTol = 1e-13;
const double kInvGolden = (std::sqrt(5.0) - 1.0) / 2.0;

double require_in(double beta, double lo, double hi, bool lo_open, bool hi_open) {
  const bool ok = (lo_open ? beta > lo : beta >= lo) && (hi_open ? beta < hi : beta <= hi);
  if (!ok) fail(Errc::domain_error, "beta outside the profile domain");
  return beta;
}

// d/dbeta of f1 and f2; only the sign is used (root bracketing).
double f1_deriv(double beta) {
  return 2.0 * std::log(2.0 * beta) - 2.0 / (beta * beta) - std::log(4.0 - beta * beta);
}

double f2_deriv(double beta) {
  return 4.0 * std::log(beta) - 2.0 / (beta * beta) - 2.0 * std::log(std::abs(1.0 - beta * beta));
}

double bisect_root(double (*fn)(double), double lo, double hi) {
  double flo = fn(lo), fhi = fn(hi);
  if (!(flo < 0.0 && fhi > 0.0))
    fail(Errc::bracket_failure, "no derivative sign change in the search bracket");
  while (hi - lo > 1e-11) {
    const double mid = 0.5 * (lo + hi);
    if (fn(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double log_psi1(double beta) {
  require_in(beta, 0.0, 2.0, true, false);
  double acc = (beta * beta + 6.0) * kLn2 + (beta * beta + 2.0) * std::log(beta);
  if (beta < 2.0) {
    const double u = 2.0 - beta;
    acc -= 0.5 * u * u * std::log(u);
  }
  const double v = 2.0 + beta;
  acc -= 0.5 * v * v * std::log(v);
  return acc;
}

double psi1(double beta) {
  require_in(beta, 0.0, 2.0, false, false);
  if (beta == 0.0) return 0.0;  // continuous limit: the beta^{beta^2+2} factor wins
  return std::exp(log_psi1(beta));
}

double f1(double beta) {
  require_in(beta, 0.0, 2.0, true, true);
  return 2.0 * beta * std::log(2.0 * beta) + 2.0 / beta + (2.0 - beta) * std::log(2.0 - beta) -
         (2.0 + beta) * std::log(2.0 + beta);
}

double log_psi2(double beta) {
  require_in(beta, 0.0, kSqrt2, true, false);
  double acc = 3.0 * kLn2 + (2.0 * beta * beta + 2.0) * std::log(beta);
  if (beta != 1.0) {  // at beta == 1 the |1-beta| factor has limit 1
    const double u = 1.0 - beta;
    acc -= u * u * std::log(std::abs(u));
  }
  const double v = 1.0 + beta;
  acc -= v * v * std::log(v);
  return acc;
}

double psi2(double beta) { return std::exp(log_psi2(beta)); }

double f2(double beta) {
  require_in(beta, 0.0, kSqrt2, true, true);
  if (beta == 1.0)
    fail(Errc::singular_point, "the closed-form derivative is singular at beta = 1");
  return 4.0 * beta * std::log(beta) + 2.0 / beta +
         2.0 * (1.0 - beta) * std::log(std::abs(1.0 - beta)) -
         2.0 * (1.0 + beta) * std::log(1.0 + beta);
}

double frak_f(double beta) {
  require_in(beta, 0.0, 1.0, true, false);
  return f1(beta) - f1(2.0 - beta);
}

double find_beta0(BoundKind kind) {
  if (kind == BoundKind::theorem1) return bisect_root(&f1_deriv, 0.5, 1.9);
  return bisect_root(&f2_deriv, 0.5, 0.99);
}

FunctionalValue bound_thm1(int n, double gamma) {
  if (n < 2) fail(Errc::domain_error, "n must be at least 2");
  if (!(gamma > 0.0 && gamma <= 1.0)) fail(Errc::domain_error, "gamma must lie in (0, 1]");
  const double nn = static_cast<double>(n);
  const double rg = std::sqrt(gamma);
  const double log_bound = (nn + gamma / nn) * std::log(4.0) + (gamma / nn) * std::log(gamma) +
                           nn * std::log(nn) - (nn + gamma / nn) * std::log(nn * nn - gamma) +
                           2.0 * rg * (std::log(nn - rg) - std::log(nn + rg));
  return FunctionalValue::from_log(log_bound);
}

FunctionalValue bound_thm2(int n) {
  if (n < 2) fail(Errc::domain_error, "n must be at least 2");
  const double nn = static_cast<double>(n);
  const double log_bound = (2.0 * nn + 1.0 / nn) * kLn2 -
                           (1.0 / nn + nn / 2.0) * std::log(nn * nn - 2.0) +
                           kSqrt2 * (std::log(nn - kSqrt2) - std::log(nn + kSqrt2));
  return FunctionalValue::from_log(log_bound);
}

double check_symmetric_identity(BoundKind kind, int n, double gamma) {
  const double nn = static_cast<double>(n);
  double lhs_log, rhs_log;
  if (kind == BoundKind::theorem1) {
    const double beta = 2.0 * std::sqrt(gamma) / nn;
    lhs_log = bound_thm1(n, gamma).log_value;
    rhs_log = nn * std::log(2.0 / nn) + 0.5 * nn * (log_psi1(beta) - 2.0 * std::log(beta));
  } else {
    const double beta = kSqrt2 / nn;
    lhs_log = bound_thm2(n).log_value;
    rhs_log = nn * std::log(2.0 / nn) + 0.5 * nn * (log_psi2(beta) - kLn2 - 2.0 * std::log(beta));
  }
  return std::abs(std::expm1(lhs_log - rhs_log));
}

namespace {

struct Profile {
  double cap;  // upper end of the beta domain
  double (*log_psi)(double);
  double (*deriv)(double);
};

Profile profile_for(BoundKind kind) {
  if (kind == BoundKind::theorem1) return {2.0, &log_psi1, &f1};
  return {kSqrt2, &log_psi2, &f2};
}

double pair_objective(const Profile& pr, double t, double s) {
  return pr.log_psi(t) + pr.log_psi(s - t);
}

// Maximize log_psi(t) + log_psi(s - t) over [lo, hi]: coarse scan for the
// basin, then golden section.
double maximize_pair(const Profile& pr, double s, double lo, double hi) {
  constexpr int kScan = 33;
  double best_t = lo, best_v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    const double t = lo + (hi - lo) * i / (kScan - 1);
    const double v = pair_objective(pr, t, s);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  const double h = (hi - lo) / (kScan - 1);
  double a = std::max(lo, best_t - h), b = std::min(hi, best_t + h);
  double x1 = b - kInvGolden * (b - a), x2 = a + kInvGolden * (b - a);
  double v1 = pair_objective(pr, x1, s), v2 = pair_objective(pr, x2, s);
  while (b - a > kGoldenWidth) {
    if (v1 < v2) {
      a = x1;
      x1 = x2;
      v1 = v2;
      x2 = a + kInvGolden * (b - a);
      v2 = pair_objective(pr, x2, s);
    } else {
      b = x2;
      x2 = x1;
      v2 = v1;
      x1 = b - kInvGolden * (b - a);
      v1 = pair_objective(pr, x1, s);
    }
  }
  const double mid = 0.5 * (a + b);
  return pair_objective(pr, mid, s) >= best_v ? mid : best_t;
}

double objective(const Profile& pr, const std::vector<double>& betas) {
  double acc = 0.0;
  for (double b : betas) acc += pr.log_psi(b);
  return acc;
}

// clip into [margin, cap] and rescale onto the budget simplex
void project(std::vector<double>& betas, double budget, double cap) {
  for (int pass = 0; pass < 4; ++pass) {
    double sum = 0.0;
    bool clipped = false;
    for (double& b : betas) {
      if (b < kInteriorMargin) {
        b = kInteriorMargin;
        clipped = true;
      }
      if (b > cap - kInteriorMargin) {
        b = cap - kInteriorMargin;
        clipped = true;
      }
      sum += b;
    }
    for (double& b : betas) b *= budget / sum;
    if (!clipped) break;
  }
}

}  // namespace

ExtremalSolution solve_product_max(BoundKind kind, int n, double budget, const SolveOptions& opts) {
  if (n < 2) fail(Errc::domain_error, "n must be at least 2");
  const Profile pr = profile_for(kind);
  if (!(budget > 0.0 && budget <= static_cast<double>(n) * pr.cap))
    fail(Errc::domain_error, "budget outside n times the profile domain");

  const double uniform_value = budget / n;
  std::vector<double> sym(static_cast<std::size_t>(n), uniform_value);
  const double sym_obj = objective(pr, sym);

  ExtremalSolution best;
  best.objective_log = -std::numeric_limits<double>::infinity();
  double best_start_obj = -std::numeric_limits<double>::infinity();
  bool all_converged = true;

  for (int start = 0; start <= opts.starts; ++start) {
    std::vector<double> betas;
    if (start == 0) {
      betas = sym;  // deterministic start at the uniform split
    } else {
      SplitMix64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(start)));
      betas.resize(static_cast<std::size_t>(n));
      for (double& b : betas) b = -std::log(1.0 - rng.uniform());  // Exp(1)
      double sum = 0.0;
      for (double b : betas) sum += b;
      for (double& b : betas) b *= budget / sum;
      project(betas, budget, pr.cap);
    }

    bool converged = false;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      double moved = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double s = betas[i] + betas[j];
          const double lo = std::max(kInteriorMargin, s - (pr.cap - kInteriorMargin));
          const double hi = std::min(pr.cap - kInteriorMargin, s - kInteriorMargin);
          if (!(lo < hi)) continue;
          const double t = maximize_pair(pr, s, lo, hi);
          if (pair_objective(pr, t, s) > pair_objective(pr, betas[i], s)) {
            moved += std::abs(t - betas[i]);
            betas[i] = t;
            betas[j] = s - t;
          }
        }
      }
      if (moved < kSweepTol) {
        converged = true;
        break;
      }
    }
    if (!converged) all_converged = false;

    std::sort(betas.begin(), betas.end());
    const double obj = objective(pr, betas);
    best_start_obj = std::max(best_start_obj, obj);
    const bool better = obj > best.objective_log + 1e-12;
    const bool tie_smaller =
        std::abs(obj - best.objective_log) <= 1e-12 && betas < best.betas;
    if (best.betas.empty() || better || tie_smaller) {
      best.betas = betas;
      best.objective_log = obj;
    }
  }

  best.converged = all_converged;

  double worst_dev = 0.0;
  for (double b : best.betas) worst_dev = std::max(worst_dev, std::abs(b - uniform_value));
  best.certified_symmetric = worst_dev <= 1e-6 && best_start_obj <= sym_obj + 1e-9;

  double residual = 0.0;
  bool residual_ok = true;
  try {
    const double f0 = pr.deriv(best.betas.front());
    for (double b : best.betas) residual = std::max(residual, std::abs(pr.deriv(b) - f0));
  } catch (const Error&) {
    residual_ok = false;
  }
  best.lagrange_residual = residual_ok ? residual : std::numeric_limits<double>::quiet_NaN();

  return best;
}

}  // namespace confrad
