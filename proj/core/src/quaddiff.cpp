#include "confrad/quaddiff.hpp"

#include <cmath>

namespace confrad {

namespace {

Complex pow_int(Complex w, int n) {
  Complex acc{1.0};
  for (int i = 0; i < n; ++i) acc *= w;
  return acc;
}

Complex numerator(const QuadDiff& q, Complex wn) {
  if (q.kind == BoundKind::theorem1)
    return (static_cast<double>(q.n) * q.n - q.gamma) * wn + q.gamma;
  return wn * wn + (2.0 * q.n * q.n - 2.0) * wn + 1.0;
}

}  // namespace

QuadDiff make_quad_diff(BoundKind kind, int n, double gamma) {
  if (n < 2) fail(Errc::domain_error, "n must be at least 2");
  if (kind == BoundKind::theorem1) {
    if (!(gamma > 0.0 && gamma <= 1.0)) fail(Errc::domain_error, "gamma must lie in (0, 1]");
    if (!(gamma < static_cast<double>(n) * n)) fail(Errc::domain_error, "gamma must stay below n^2");
  }
  return QuadDiff{kind, n, gamma};
}

Complex eval_q(const QuadDiff& q, Complex w) {
  const Complex wn = pow_int(w, q.n);
  if (w == Complex{0.0} || wn == Complex{1.0})
    fail(Errc::pole_evaluation, "evaluation point is a pole of the differential");
  const Complex ring = wn - 1.0;
  return -numerator(q, wn) / (w * w * ring * ring);
}

CriticalSet critical_points(const QuadDiff& q) {
  CriticalSet cs;
  const int n = q.n;
  if (q.kind == BoundKind::theorem1) {
    // zeros solve w^n = -gamma / (n^2 - gamma)
    const double mod = std::pow(q.gamma / (n * n - q.gamma), 1.0 / n);
    for (int j = 0; j < n; ++j)
      cs.zeros.push_back({std::polar(mod, (kPi + kTwoPi * j) / n), 1});
  } else {
    // zeros solve w^n = u with u^2 + (2 n^2 - 2) u + 1 = 0; the two real
    // roots are negative and multiply to 1. The small one is computed as
    // -1/(D + s) to avoid cancellation.
    const double d = static_cast<double>(n) * n - 1.0;
    const double s = std::sqrt(d * d - 1.0);
    const double mod_small = std::pow(1.0 / (d + s), 1.0 / n);
    const double mod_large = std::pow(d + s, 1.0 / n);
    for (int j = 0; j < n; ++j) {
      const double angle = (kPi + kTwoPi * j) / n;
      cs.zeros.push_back({std::polar(mod_small, angle), 1});
      cs.zeros.push_back({std::polar(mod_large, angle), 1});
    }
  }
  cs.poles.push_back({Complex{0.0}, 2});
  for (int j = 0; j < n; ++j) cs.poles.push_back({std::polar(1.0, kTwoPi * j / n), 2});

  const int deg_num = q.kind == BoundKind::theorem1 ? n : 2 * n;
  const int deg_den = 2 * n + 2;
  cs.infinity_order = 4 + deg_num - deg_den;
  return cs;
}

namespace {

Complex unit_direction(const QuadDiff& q, Complex w, Complex reference) {
  Complex qv;
  try {
    qv = eval_q(q, w);
  } catch (const Error&) {
    return reference;  // stage point fell on a pole; the proximity stop ends the line
  }
  if (qv == Complex{0.0}) return reference;
  Complex v = 1.0 / std::sqrt(qv);
  v /= std::abs(v);
  if (std::real(std::conj(reference) * v) < 0.0) v = -v;  // branch continuity
  return v;
}

}  // namespace

std::vector<Trajectory> sample_trajectories(const QuadDiff& q, std::span<const Complex> seeds,
                                            double step, double max_len,
                                            const TrajectoryOptions& opts) {
  if (!(step > 0.0)) fail(Errc::precondition, "step must be positive");
  if (!(max_len > 0.0)) fail(Errc::precondition, "max_len must be positive");

  const CriticalSet cs = critical_points(q);
  std::vector<Complex> singular;
  for (const auto& z : cs.zeros) singular.push_back(z.location);
  for (const auto& p : cs.poles) singular.push_back(p.location);
  const double keep_out = 10.0 * step;
  const auto near_singular = [&](Complex w) {
    for (Complex sp : singular)
      if (std::abs(w - sp) < keep_out) return true;
    return false;
  };

  std::vector<Trajectory> out;
  out.reserve(seeds.size());
  const int max_steps = static_cast<int>(std::ceil(max_len / step));

  for (Complex seed : seeds) {
    if (near_singular(seed))
      fail(Errc::seed_at_singularity, "seed too close to a zero or pole");

    Trajectory tr;
    tr.points.push_back(seed);
    tr.stop = TrajectoryStop::length_cap;

    // initial branch: prefer the half-plane Re > 0, then Im > 0
    Complex dir = 1.0 / std::sqrt(eval_q(q, seed));
    dir /= std::abs(dir);
    if (dir.real() < 0.0 || (dir.real() == 0.0 && dir.imag() < 0.0)) dir = -dir;

    Complex w = seed;
    for (int i = 0; i < max_steps; ++i) {
      const Complex k1 = unit_direction(q, w, dir);
      const Complex k2 = unit_direction(q, w + 0.5 * step * k1, k1);
      const Complex k3 = unit_direction(q, w + 0.5 * step * k2, k2);
      const Complex k4 = unit_direction(q, w + step * k3, k3);
      const Complex delta = (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      w += delta;
      tr.points.push_back(w);
      const double len = std::abs(delta);
      dir = len > 0.0 ? delta / len : k4;
      if (near_singular(w)) {
        tr.stop = TrajectoryStop::near_critical;
        break;
      }
      if (std::abs(w) > opts.escape_radius) {
        tr.stop = TrajectoryStop::left_bounds;
        break;
      }
    }
    out.push_back(std::move(tr));
  }
  return out;
}

}  // namespace confrad
