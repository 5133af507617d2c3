#include "confrad/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>  // vendored nlohmann/json

#include "confrad/bounds.hpp"
#include "confrad/functionals.hpp"

namespace confrad {

namespace {

constexpr double kViolationSlack = -1e-9;  // log-margin below this counts as a violation

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Configuration generate_configuration(SplitMix64& rng, int n, Theorem theorem,
                                     const GenParams& params) {
  if (n < 2) fail(Errc::precondition, "n must be at least 2");

  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (double& a : angles) a = rng.uniform(0.0, kTwoPi);
    std::sort(angles.begin(), angles.end());
    double min_gap = kTwoPi - angles.back() + angles.front();
    for (int k = 0; k + 1 < n; ++k) min_gap = std::min(min_gap, angles[k + 1] - angles[k]);
    if (min_gap < params.min_gap) continue;

    std::vector<Complex> pts(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      pts[k] = std::polar(rng.log_uniform(params.mod_lo, params.mod_hi), angles[k]);

    Configuration cfg;
    cfg.rays = validate_ray_system(pts);

    cfg.pole_domains.reserve(pts.size());
    double reach = 0.0;
    for (int k = 0; k < n; ++k) {
      const Complex a = cfg.rays.points[k];
      double safe = std::abs(a);
      for (int j = 0; j < n; ++j)
        if (j != k) safe = std::min(safe, std::abs(a - cfg.rays.points[j]));
      const double frac = params.frac_hi * (1.0 - rng.uniform());  // in (0, frac_hi]
      const double radius = frac * safe / 2.0;
      cfg.pole_domains.push_back(Disk{a, radius});
      reach = std::max(reach, std::abs(a) + radius);
    }

    double safe0 = std::abs(cfg.rays.points[0]);
    for (const auto& p : cfg.rays.points) safe0 = std::min(safe0, std::abs(p));
    cfg.origin_domain = Disk{Complex{0.0}, params.frac_hi * (1.0 - rng.uniform()) * safe0 / 2.0};

    if (theorem == Theorem::two)
      cfg.infinity_domain = DiskExterior{Complex{0.0}, rng.uniform(params.ext_lo, params.ext_hi) * reach};

    try {
      validate_configuration(cfg);
    } catch (const Error&) {
      continue;
    }
    return cfg;
  }
  fail(Errc::retry_exhausted, "no admissible configuration within the attempt budget");
}

Configuration normalize_to_constraint(const Configuration& cfg, Theorem theorem, double gamma) {
  const double exponent_gamma = theorem == Theorem::one ? gamma : 0.0;
  const double log_l = l_gamma(cfg.rays, exponent_gamma).log_value;
  const double factor = std::exp(-log_l / (cfg.rays.n() + exponent_gamma));
  return scaled(cfg, factor);
}

std::string to_json_line(const TrialReport& r) {
  nlohmann::ordered_json j;
  j["seed"] = r.seed;
  j["theorem"] = r.theorem == Theorem::one ? "T1" : "T2";
  j["n"] = r.n;
  j["gamma"] = r.gamma;
  auto points = nlohmann::ordered_json::array();
  for (const Complex& p : r.points) points.push_back({p.real(), p.imag()});
  j["points"] = std::move(points);
  j["radii"] = r.radii;
  j["l_value"] = r.l_value;
  j["functional"] = r.functional;
  j["bound"] = r.bound;
  j["margin"] = r.margin;
  j["ok"] = r.ok;
  return j.dump();
}

std::string run_summary_csv_header() {
  return "trials,violations,skipped,min_margin,config_digest";
}

std::string to_csv_row(const RunSummary& s) {
  std::ostringstream os;
  os << s.trials << ',' << s.violations << ',' << s.skipped << ',' << fmt_double(s.min_margin)
     << ',' << s.config_digest;
  return os.str();
}

namespace {

std::string digest_of(const VerifySpec& spec) {
  std::ostringstream os;
  os << (spec.theorem == Theorem::one ? "T1" : "T2") << " n=" << spec.n_lo << ".." << spec.n_hi;
  if (spec.theorem == Theorem::one) {
    os << " gammas=";
    for (std::size_t i = 0; i < spec.gammas.size(); ++i) {
      if (i) os << '|';
      os << fmt_double(spec.gammas[i]);
    }
  }
  os << " trials=" << spec.trials << " seed=" << spec.seed;
  return os.str();
}

double extract_radius(const CanonicalDomain& d) {
  if (const auto* dk = std::get_if<Disk>(&d)) return dk->radius;
  if (const auto* de = std::get_if<DiskExterior>(&d)) return de->radius;
  fail(Errc::precondition, "sampled domains are disks or disk exteriors");
}

}  // namespace

RunSummary run_verification(const VerifySpec& spec, const TrialSink& sink) {
  if (spec.trials < 1) fail(Errc::precondition, "at least one trial per combination");
  if (spec.n_lo < 2 || spec.n_hi < spec.n_lo) fail(Errc::precondition, "bad n range");
  const bool t1 = spec.theorem == Theorem::one;
  if (t1 && spec.gammas.empty()) fail(Errc::precondition, "theorem one needs a gamma list");

  const std::vector<double> gammas = t1 ? spec.gammas : std::vector<double>{0.5};

  RunSummary summary;
  summary.config_digest = digest_of(spec);

  std::uint64_t counter = 0;
  for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
    for (double gamma : gammas) {
      const FunctionalValue bound = t1 ? bound_thm1(n, gamma) : bound_thm2(n);
      for (long t = 0; t < spec.trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(spec.seed, counter++);
        SplitMix64 rng(trial_seed);
        Configuration cfg;
        try {
          cfg = generate_configuration(rng, n, spec.theorem, spec.gen);
          cfg = normalize_to_constraint(cfg, spec.theorem, gamma);
        } catch (const Error&) {
          ++summary.skipped;
          continue;
        }

        const FunctionalValue fv = t1 ? j_gamma(cfg, gamma) : i_gamma(cfg, 0.5);

        TrialReport r;
        r.seed = trial_seed;
        r.theorem = spec.theorem;
        r.n = n;
        r.gamma = t1 ? gamma : 0.5;
        r.points = cfg.rays.points;
        r.radii.push_back(extract_radius(*cfg.origin_domain));
        for (const auto& d : cfg.pole_domains) r.radii.push_back(extract_radius(d));
        if (cfg.infinity_domain) r.radii.push_back(extract_radius(*cfg.infinity_domain));
        r.l_value = l_gamma(cfg.rays, t1 ? gamma : 0.0).value;
        r.functional = fv.value;
        r.bound = bound.value;
        r.margin = bound.log_value - fv.log_value;
        r.ok = r.margin >= kViolationSlack;

        ++summary.trials;
        if (!r.ok) ++summary.violations;
        summary.min_margin = std::min(summary.min_margin, r.margin);
        if (sink) sink(r);
      }
    }
  }
  return summary;
}

}  // namespace confrad
