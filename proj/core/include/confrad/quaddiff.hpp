#pragma once

#include <span>
#include <vector>

#include "confrad/bounds.hpp"
#include "confrad/complex_plane.hpp"

namespace confrad {

// Rational quadratic differential Q(w) dw^2 whose circular domains realize
// the equality configurations of the two bound families:
//
//   theorem1:  Q(w) = -((n^2 - gamma) w^n + gamma) / (w^2 (w^n - 1)^2)
//   theorem2:  Q(w) = -(w^{2n} + (2 n^2 - 2) w^n + 1) / (w^2 (w^n - 1)^2)
struct QuadDiff {
  BoundKind kind = BoundKind::theorem1;
  int n = 2;
  double gamma = 1.0;  // theorem1 only
};

QuadDiff make_quad_diff(BoundKind kind, int n, double gamma = 0.5);

Complex eval_q(const QuadDiff& q, Complex w);

struct CriticalPoint {
  Complex location;
  int order;  // zero multiplicity / pole order
};

// Zeros and poles with multiplicities. infinity_order follows the
// degree-count convention: positive for a pole at infinity, negative for a
// zero of that multiplicity, 0 for a regular point. The sphere degree
// relation reads
//   (zero orders) - (finite pole orders) - infinity_order = -4.
struct CriticalSet {
  std::vector<CriticalPoint> zeros;
  std::vector<CriticalPoint> poles;
  int infinity_order = 0;
};

CriticalSet critical_points(const QuadDiff& q);

enum class TrajectoryStop { length_cap, near_critical, left_bounds };

struct Trajectory {
  std::vector<Complex> points;
  TrajectoryStop stop = TrajectoryStop::length_cap;
};

struct TrajectoryOptions {
  double escape_radius = 10.0;
};

// Sample horizontal trajectories (Q dw^2 > 0) through the given seeds:
// fixed-step RK4 on the unit direction field 1/sqrt(Q), with the branch of
// the square root chosen for continuity along the path (smallest angular
// jump). A polyline ends at max_len of arc length, within 10*step of a
// zero or finite pole, or on leaving the escape disk.
std::vector<Trajectory> sample_trajectories(const QuadDiff& q, std::span<const Complex> seeds,
                                            double step, double max_len,
                                            const TrajectoryOptions& opts = {});

}  // namespace confrad
