#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "confrad/configuration.hpp"
#include "confrad/rng.hpp"

namespace confrad {

enum class Theorem { one, two };

struct GenParams {
  double min_gap = 0.05;  // minimum angular gap between rays, radians
  double mod_lo = 0.5;    // log-uniform modulus range
  double mod_hi = 2.0;
  double frac_hi = 0.95;  // top of the (0, frac_hi] range of the safe radius used
  double ext_lo = 1.05;   // infinity-domain boundary factor over max(|a_k| + r_k)
  double ext_hi = 3.0;
  int max_attempts = 100;
};

// Random admissible configuration: sorted angles with a minimum gap, moduli
// log-uniform, disks centered at the poles (and at the origin) with radii a
// random fraction of half the distance to the nearest other pole or 0, and
// for theorem two a disk exterior around everything. Disjointness is
// re-verified after construction; pathological parameters exhaust the
// attempt budget and throw retry_exhausted.
Configuration generate_configuration(SplitMix64& rng, int n, Theorem theorem,
                                     const GenParams& params = {});

// Scale the whole configuration so the ray-system product constraint equals
// one: the gamma-weighted product for theorem one, the unweighted one for
// theorem two. Scaling preserves disjointness exactly.
Configuration normalize_to_constraint(const Configuration& cfg, Theorem theorem, double gamma);

struct TrialReport {
  std::uint64_t seed = 0;
  Theorem theorem = Theorem::one;
  int n = 0;
  double gamma = 0.0;
  std::vector<Complex> points;
  std::vector<double> radii;  // origin radius, pole radii, then (theorem two) the exterior boundary radius
  double l_value = 0.0;
  double functional = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // ln(bound) - ln(functional)
  bool ok = false;      // margin >= -1e-9
};

// One JSON object per line, fixed field order, no trailing newline.
std::string to_json_line(const TrialReport& r);

struct RunSummary {
  long trials = 0;
  long violations = 0;
  long skipped = 0;  // trials abandoned due to generation errors
  double min_margin = std::numeric_limits<double>::infinity();
  std::string config_digest;
};

std::string run_summary_csv_header();
std::string to_csv_row(const RunSummary& s);

struct VerifySpec {
  Theorem theorem = Theorem::one;
  int n_lo = 2;
  int n_hi = 5;
  std::vector<double> gammas;  // theorem one only; theorem two runs once at 1/2
  long trials = 1000;          // per (n, gamma) combination
  std::uint64_t seed = 0;
  GenParams gen;
};

using TrialSink = std::function<void(const TrialReport&)>;

// Sweep n and gamma, run `trials` independent trials per combination, feed
// every report to the sink in trial order. Fully deterministic for a given
// spec: per-trial seeds derive from the root seed by counter.
RunSummary run_verification(const VerifySpec& spec, const TrialSink& sink);

}  // namespace confrad
