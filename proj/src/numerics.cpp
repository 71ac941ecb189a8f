#include "gicpc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gicpc/errors.hpp"

namespace gicpc {

namespace {

constexpr double kBranchPoint = -1.0 / std::numbers::e;
constexpr int kHalleyMaxIter = 64;
constexpr double kHalleyStepTol = 1e-14;

double initial_guess(double x) {
  if (x < -0.32) {
    // Series about the branch point in p = sqrt(2(ex + 1)).
    const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  }
  if (x <= std::numbers::e) return std::log1p(x);
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x < kBranchPoint) {
    // Allow a few ulps of rounding below the branch point, e.g. (eps-1)/e at eps=0.
    if (x < kBranchPoint - 4.0 * std::numeric_limits<double>::epsilon())
      throw DomainError("lambert_w0: argument " + std::to_string(x) + " below -1/e");
    return -1.0;
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w = initial_guess(x);
  for (int i = 0; i < kHalleyMaxIter; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double dw = f / denom;
    w -= dw;
    if (std::abs(dw) <= kHalleyStepTol * (1.0 + std::abs(w))) break;
  }
  return std::max(w, -1.0);
}

Rate capacity(double snr) {
  if (!(snr >= 0.0)) throw DomainError("capacity: negative SNR " + std::to_string(snr));
  return 0.5 * std::log1p(snr) / std::numbers::ln2;
}

Rate burst_rate(double theta, double power, double eps) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("burst_rate: fraction outside [0,1]");
  if (theta == 0.0) return 0.0;
  double snr = power / theta - eps;
  if (snr < 0.0) {
    // theta*(nu + eps) = P can land a rounding error below zero at nu = 0.
    if (snr > -1e-12 * (1.0 + eps)) {
      snr = 0.0;
    } else {
      throw InfeasibleError("burst_rate: signaling power " + std::to_string(snr) + " is negative");
    }
  }
  return theta * capacity(snr);
}

void GridSpec::validate() const {
  if (lower.size() != upper.size() || lower.empty())
    throw std::invalid_argument("GridSpec: bounds must be non-empty and of equal dimension");
  for (std::size_t d = 0; d < lower.size(); ++d) {
    if (!(std::isfinite(lower[d]) && std::isfinite(upper[d]) && lower[d] <= upper[d]))
      throw std::invalid_argument("GridSpec: lower > upper in dimension " + std::to_string(d));
  }
  if (!(resolution > 0.0)) throw std::invalid_argument("GridSpec: resolution must be positive");
  if (refinements < 0) throw std::invalid_argument("GridSpec: negative refinement count");
  if (!(shrink > 0.0 && shrink < 1.0)) throw std::invalid_argument("GridSpec: shrink must lie in (0,1)");
}

GridSpec make_grid(std::vector<double> lower, std::vector<double> upper, const GridOptions& opts) {
  GridSpec spec;
  spec.lower = std::move(lower);
  spec.upper = std::move(upper);
  spec.resolution = opts.resolution;
  spec.refinements = opts.refinements;
  spec.shrink = opts.shrink;
  return spec;
}

std::vector<double> grid_axis(double lower, double upper, double step) {
  if (!(upper > lower)) return {lower};
  const auto n = static_cast<long>(std::floor((upper - lower) / step + 1e-9));
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n) + 2);
  for (long k = 0; k <= n; ++k) pts.push_back(lower + static_cast<double>(k) * step);
  if (upper - pts.back() <= 1e-9 * step) {
    pts.back() = upper;
  } else {
    pts.push_back(upper);
  }
  return pts;
}

namespace {

// Lexicographic scan of the tensor grid; updates best only on strict improvement.
void scan(const Objective& objective, const std::vector<std::vector<double>>& axes,
          std::vector<double>& best_point, double& best_value) {
  const std::size_t dim = axes.size();
  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> point(dim);
  while (true) {
    for (std::size_t d = 0; d < dim; ++d) point[d] = axes[d][idx[d]];
    const double v = objective(std::span<const double>(point));
    if (!std::isnan(v) && v > best_value) {
      best_value = v;
      best_point = point;
    }
    std::size_t d = dim;
    while (d > 0) {
      --d;
      if (++idx[d] < axes[d].size()) break;
      idx[d] = 0;
      if (d == 0) return;
    }
  }
}

}  // namespace

GridMaximum maximize_on_grid(const Objective& objective, const GridSpec& spec) {
  spec.validate();
  const std::size_t dim = spec.lower.size();
  std::vector<std::vector<double>> axes(dim);
  for (std::size_t d = 0; d < dim; ++d) axes[d] = grid_axis(spec.lower[d], spec.upper[d], spec.resolution);

  std::vector<double> best_point;
  double best_value = -std::numeric_limits<double>::infinity();
  scan(objective, axes, best_point, best_value);
  if (best_point.empty()) throw NoFeasiblePointError("maximize_on_grid: no feasible grid point");

  double step = spec.resolution;
  for (int r = 0; r < spec.refinements; ++r) {
    const double half_width = step;
    step *= spec.shrink;
    const std::vector<double> center = best_point;
    for (std::size_t d = 0; d < dim; ++d) {
      const double lo = std::max(spec.lower[d], center[d] - half_width);
      const double hi = std::min(spec.upper[d], center[d] + half_width);
      axes[d] = grid_axis(lo, hi, step);
    }
    scan(objective, axes, best_point, best_value);
  }
  return {best_point, best_value};
}

}  // namespace gicpc
