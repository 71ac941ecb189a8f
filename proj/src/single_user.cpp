#include "gicpc/single_user.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gicpc/errors.hpp"
#include "gicpc/numerics.hpp"

namespace gicpc {

namespace {
constexpr double kUnitCostBand = 1e-9;
}

BurstPoint optimal_burstiness(const UserBudget& budget) {
  budget.validate();
  const double p = budget.power;
  const double eps = budget.eps;

  double theta = 1.0;
  if (eps == 0.0) {
    theta = 1.0;
  } else if (std::abs(eps - 1.0) < kUnitCostBand) {
    theta = std::min(1.0, p / std::numbers::e);
  } else {
    const double w = lambert_w0((eps - 1.0) / std::numbers::e);
    const double ratio = p * w / ((eps - 1.0) * (w + 1.0));
    theta = std::isfinite(ratio) ? std::min(1.0, ratio) : 1.0;
  }
  return {theta, p / theta - eps};
}

Rate interference_free_rate(const UserBudget& budget) {
  const BurstPoint bp = optimal_burstiness(budget);
  return bp.theta * capacity(std::max(0.0, bp.nu));
}

double asymptotic_fraction(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("asymptotic_fraction: lambda must be positive");
  return std::min(1.0, lambda);
}

}  // namespace gicpc
