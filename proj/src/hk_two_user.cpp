#include "gicpc/hk_two_user.hpp"

#include <algorithm>
#include <cmath>

#include "gicpc/errors.hpp"

namespace gicpc {

std::array<Rate, 4> hk_psi(double p1, double p2, double a, double b, const PowerSplit& split) {
  if (!(p1 >= 0.0 && p2 >= 0.0)) throw DomainError("hk_psi: signaling powers must be non-negative");
  split.validate();
  const double t1 = split.tau1;
  const double t2 = split.tau2;
  // Private parts of the other user act as noise at each receiver.
  const double noise1 = 1.0 + a * (1.0 - t2) * p2;
  const double noise2 = 1.0 + b * (1.0 - t1) * p1;
  return {
      capacity(p1 / noise1) + capacity(p2 / noise2),
      capacity((p1 + a * t2 * p2) / noise1) + capacity((1.0 - t2) * p2 / noise2),
      capacity((1.0 - t1) * p1 / noise1) + capacity((p2 + b * t1 * p1) / noise2),
      capacity(((1.0 - t1) * p1 + a * t2 * p2) / noise1) + capacity(((1.0 - t2) * p2 + b * t1 * p1) / noise2),
  };
}

Rate hk_sum_rate_fixed_split(double p1, double p2, double a, double b, const PowerSplit& split) {
  const auto psi = hk_psi(p1, p2, a, b, split);
  return *std::min_element(psi.begin(), psi.end());
}

bool noisy_interference_test(double a, double b, double p1, double p2) {
  return std::sqrt(a) * (b * p1 + 1.0) + std::sqrt(b) * (a * p2 + 1.0) <= 1.0;
}

HkResult hk_sum_rate(double p1, double p2, double a, double b, const GridOptions& opts) {
  if (a >= 1.0 && b >= 1.0) {
    const PowerSplit common{1.0, 1.0};
    return {hk_sum_rate_fixed_split(p1, p2, a, b, common), common};
  }
  if (noisy_interference_test(a, b, p1, p2)) {
    const PowerSplit priv{0.0, 0.0};
    return {hk_sum_rate_fixed_split(p1, p2, a, b, priv), priv};
  }
  const auto best = maximize_on_grid(
      [&](std::span<const double> tau) { return hk_sum_rate_fixed_split(p1, p2, a, b, {tau[0], tau[1]}); },
      make_grid({0.0, 0.0}, {1.0, 1.0}, opts));
  return {best.value, {best.point[0], best.point[1]}};
}

}  // namespace gicpc
