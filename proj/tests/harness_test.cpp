#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "confrad/bounds.hpp"
#include "confrad/functionals.hpp"
#include "confrad/harness.hpp"
#include "test_support.hpp"

using namespace confrad;
using doctest::Approx;

TEST_CASE("generate_configuration: valid and fully disjoint") {
  SplitMix64 rng(1);
  const Configuration cfg = generate_configuration(rng, 3, Theorem::one);
  CHECK(cfg.rays.n() == 3);
  CHECK(cfg.origin_domain.has_value());
  CHECK(!cfg.infinity_domain.has_value());
  CHECK_NOTHROW(validate_configuration(cfg));
}

TEST_CASE("generate_configuration: theorem two carries an exterior") {
  SplitMix64 rng(2);
  const Configuration cfg = generate_configuration(rng, 2, Theorem::two);
  REQUIRE(cfg.infinity_domain.has_value());
  CHECK(std::holds_alternative<DiskExterior>(*cfg.infinity_domain));
  CHECK_NOTHROW(validate_configuration(cfg));
}

TEST_CASE("generate_configuration: impossible gap budget exhausts retries") {
  SplitMix64 rng(3);
  GenParams params;
  params.min_gap = 10.0;  // n * min_gap exceeds a full turn
  CHECK_ERRC(Errc::retry_exhausted, generate_configuration(rng, 4, Theorem::one, params));
}

TEST_CASE("normalize_to_constraint: known scale factor and unit landing") {
  Configuration cfg;
  const std::vector<Complex> pts{{1, 0}, {-2, 0}};
  cfg.rays = validate_ray_system(pts);  // l_gamma at gamma=1 equals exactly 3
  cfg.pole_domains = {Disk{{1, 0}, 0.3}, Disk{{-2, 0}, 0.3}};
  cfg.origin_domain = Disk{{0, 0}, 0.3};

  const Configuration norm = normalize_to_constraint(cfg, Theorem::one, 1.0);
  const double t = std::abs(norm.rays.points[0]);  // original modulus 1
  CHECK(t == Approx(std::pow(3.0, -1.0 / 3.0)).epsilon(1e-12));
  CHECK(std::abs(l_gamma(norm.rays, 1.0).log_value) <= 1e-10);
  CHECK_NOTHROW(validate_configuration(norm));
}

TEST_CASE("normalize_to_constraint: idempotent, fixed point on unit roots") {
  SplitMix64 rng(5);
  const Configuration cfg = generate_configuration(rng, 4, Theorem::one);
  const Configuration once = normalize_to_constraint(cfg, Theorem::one, 0.5);
  const Configuration twice = normalize_to_constraint(once, Theorem::one, 0.5);
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(twice.rays.points[k] - once.rays.points[k]) <=
          1e-12 * std::abs(once.rays.points[k]));

  Configuration roots;
  const std::vector<Complex> pts{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  roots.rays = validate_ray_system(pts);
  roots.pole_domains.assign(4, Disk{{0, 0}, 0.1});
  for (int k = 0; k < 4; ++k) roots.pole_domains[k] = Disk{roots.rays.points[k], 0.1};
  roots.origin_domain = Disk{{0, 0}, 0.1};
  const Configuration same = normalize_to_constraint(roots, Theorem::one, 1.0);
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(same.rays.points[k] - roots.rays.points[k]) <= 1e-12);
}

TEST_CASE("run_verification: clean small sweep, deterministic streams") {
  VerifySpec spec;
  spec.theorem = Theorem::one;
  spec.n_lo = 2;
  spec.n_hi = 3;
  spec.gammas = {0.5, 1.0};
  spec.trials = 200;
  spec.seed = 7;

  std::ostringstream a, b;
  const RunSummary sa = run_verification(spec, [&](const TrialReport& r) { a << to_json_line(r) << '\n'; });
  const RunSummary sb = run_verification(spec, [&](const TrialReport& r) { b << to_json_line(r) << '\n'; });

  CHECK(sa.trials == 800);
  CHECK(sa.violations == 0);
  CHECK(sa.skipped == 0);
  CHECK(sa.min_margin >= -1e-9);
  CHECK(a.str() == b.str());
  CHECK(to_csv_row(sa) == to_csv_row(sb));
}

TEST_CASE("run_verification: theorem two sweep") {
  VerifySpec spec;
  spec.theorem = Theorem::two;
  spec.n_lo = 2;
  spec.n_hi = 4;
  spec.trials = 200;
  spec.seed = 11;
  long count = 0;
  const RunSummary s = run_verification(spec, [&](const TrialReport& r) {
    ++count;
    CHECK(r.gamma == 0.5);
    CHECK(r.radii.size() == static_cast<std::size_t>(r.n) + 2);  // origin, poles, exterior
    CHECK(std::abs(r.l_value - 1.0) <= 1e-10);
  });
  CHECK(count == s.trials);
  CHECK(s.violations == 0);
}

TEST_CASE("run_verification: rejects an empty run") {
  VerifySpec spec;
  spec.trials = 0;
  spec.gammas = {1.0};
  CHECK_ERRC(Errc::precondition, run_verification(spec, nullptr));
}

TEST_CASE("near-extremal symmetric configuration keeps a nonnegative margin") {
  // unit roots of order two with the largest tangent disks: the best the
  // disk-only family can do against the n=2, gamma=1 bound
  Configuration cfg;
  const std::vector<Complex> pts{{1, 0}, {-1, 0}};
  cfg.rays = validate_ray_system(pts);
  cfg.pole_domains = {Disk{{1, 0}, 2.0 / 3.0}, Disk{{-1, 0}, 2.0 / 3.0}};
  cfg.origin_domain = Disk{{0, 0}, 1.0 / 3.0};
  CHECK_NOTHROW(validate_configuration(cfg));
  CHECK(std::abs(l_gamma(cfg.rays, 1.0).log_value) <= 1e-12);  // already normalized

  const double margin = bound_thm1(2, 1.0).log_value - j_gamma(cfg, 1.0).log_value;
  CHECK(margin >= 0.0);
  CHECK(margin < 2.0);
}

TEST_CASE("margin is invariant under a global rescale plus renormalization") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Configuration cfg = generate_configuration(rng, 3, Theorem::one);
    const double gamma = 0.5;
    const Configuration n1 = normalize_to_constraint(cfg, Theorem::one, gamma);
    const Configuration n2 =
        normalize_to_constraint(scaled(cfg, rng.log_uniform(0.1, 10.0)), Theorem::one, gamma);
    const double m1 = bound_thm1(3, gamma).log_value - j_gamma(n1, gamma).log_value;
    const double m2 = bound_thm1(3, gamma).log_value - j_gamma(n2, gamma).log_value;
    CHECK(std::abs(m1 - m2) <= 1e-9);
  }
}

TEST_CASE("to_json_line: field order and values") {
  TrialReport r;
  r.seed = 42;
  r.theorem = Theorem::one;
  r.n = 2;
  r.gamma = 0.5;
  r.points = {Complex{1, 0}, Complex{0, 1}};
  r.radii = {0.25, 0.5, 0.5};
  r.l_value = 1.0;
  r.functional = 0.0625;
  r.bound = 1.5;
  r.margin = std::log(1.5 / 0.0625);
  r.ok = true;
  const std::string line = to_json_line(r);
  CHECK(line.find("\"seed\":42") != std::string::npos);
  CHECK(line.find("\"theorem\":\"T1\"") != std::string::npos);
  CHECK(line.find("\"points\":[[1.0,0.0],[0.0,1.0]]") != std::string::npos);
  CHECK(line.find("\"ok\":true") != std::string::npos);
  CHECK(line.find("\"seed\"") < line.find("\"theorem\""));
  CHECK(line.find("\"margin\"") < line.find("\"ok\""));
}
