#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gicpc/types.hpp"

namespace gicpc {

/// Principal branch W0 of the Lambert W function, the solution of w*exp(w) = x
/// with w >= -1. Computed by Halley iteration; throws DomainError for
/// x < -1/e.
double lambert_w0(double x);

/// Gaussian point-to-point capacity C(snr) = 0.5*log2(1 + snr).
/// Throws DomainError for negative (or NaN) snr.
Rate capacity(double snr);

/// Rate of a user that is on for a fraction `theta` of the time with average
/// power `power` and processing cost `eps`: theta * C(power/theta - eps).
/// theta = 0 yields 0 (the continuous extension). Throws InfeasibleError when
/// the signaling power power/theta - eps is negative.
Rate burst_rate(double theta, double power, double eps);

/// Box and schedule for maximize_on_grid.
struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  double resolution = 0.01;
  int refinements = 2;
  double shrink = 0.1;

  void validate() const;
};

struct GridOptions {
  double resolution = 0.01;
  int refinements = 2;
  double shrink = 0.1;
};

/// Resolution schedule used by the scheme optimizers. `plane` drives the
/// one- and two-dimensional searches (burst fractions, stand-alone power
/// splits), `cube` the three-dimensional cascade profiles, and `split` the
/// power-split search nested inside every overlap-fraction evaluation.
struct SearchOptions {
  GridOptions plane{0.01, 2, 0.1};
  GridOptions cube{0.02, 2, 0.1};
  GridOptions split{0.05, 3, 0.1};
};

GridSpec make_grid(std::vector<double> lower, std::vector<double> upper, const GridOptions& opts);

struct GridMaximum {
  std::vector<double> point;
  double value = 0.0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Maximizes `objective` over the box in `spec`. Infeasible points must map to
/// -infinity. A coarse lexicographic scan (first coordinate outermost, upper
/// endpoints always included) is followed by `refinements` rounds, each
/// rescanning a box of +-previous step around the incumbent at a step shrunk
/// by `shrink` and clipped to the original bounds. Ties keep the earlier
/// point. Throws NoFeasiblePointError if no scanned point is finite.
GridMaximum maximize_on_grid(const Objective& objective, const GridSpec& spec);

/// Points lower, lower+step, ... with `upper` always the last point. A
/// degenerate interval yields the single point `lower`.
std::vector<double> grid_axis(double lower, double upper, double step);

}  // namespace gicpc
