#include "gicpc/very_strong.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gicpc/single_user.hpp"

namespace gicpc {

namespace {

constexpr double kBisectionTol = 1e-9;
constexpr double kConditionSlack = 1e-12;

struct SideParams {
  double nu_own;    // signaling power of the user whose rate is protected
  double nu_other;  // signaling power of the interfering user
  double rho;
};

// log-domain slack of one condition; >= 0 iff the condition holds at `gain`.
double condition_margin(const SideParams& s, double gain) {
  const double lhs = std::log1p(s.nu_own);
  const double rhs =
      s.rho * std::log1p(gain * s.nu_own) + (1.0 - s.rho) * std::log1p(gain * s.nu_own / (1.0 + s.nu_other));
  return rhs - lhs + kConditionSlack * (1.0 + lhs);
}

struct Sides {
  SideParams for_a;  // protects user 2 at receiver 1
  SideParams for_b;  // protects user 1 at receiver 2
  bool contention_free = false;
  bool full_duty = false;
};

Sides sides(const TwoUserChannel& ch) {
  ch.validate();
  const BurstPoint u1 = optimal_burstiness(ch.user1);
  const BurstPoint u2 = optimal_burstiness(ch.user2);
  Sides s;
  s.contention_free = u1.theta + u2.theta <= 1.0;
  s.full_duty = u1.theta == 1.0 && u2.theta == 1.0;
  s.for_a = {u2.nu, u1.nu, (1.0 - u1.theta) / u2.theta};
  s.for_b = {u1.nu, u2.nu, (1.0 - u2.theta) / u1.theta};
  return s;
}

double solve_threshold(const SideParams& s, double upper_guess) {
  double lo = 1.0;
  if (condition_margin(s, lo) >= 0.0) lo = 0.0;
  double hi = upper_guess;
  for (int i = 0; i < 64 && condition_margin(s, hi) < 0.0; ++i) hi *= 2.0;
  while (hi - lo > kBisectionTol) {
    const double mid = 0.5 * (lo + hi);
    if (condition_margin(s, mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

RhoPair rho_pair(const TwoUserChannel& ch) {
  const Sides s = sides(ch);
  return {s.for_a.rho, s.for_b.rho};
}

bool is_very_strong(const TwoUserChannel& ch) {
  const Sides s = sides(ch);
  if (s.contention_free) return true;
  return condition_margin(s.for_a, ch.a) >= 0.0 && condition_margin(s.for_b, ch.b) >= 0.0;
}

Thresholds very_strong_thresholds(const TwoUserChannel& ch) {
  const Sides s = sides(ch);
  if (s.contention_free) return {0.0, 0.0};
  if (s.full_duty) return {1.0 + s.for_a.nu_other, 1.0 + s.for_b.nu_other};
  const double bracket = 2.0 + std::max(ch.user1.power, ch.user2.power);
  return {solve_threshold(s.for_a, bracket), solve_threshold(s.for_b, bracket)};
}

AsymptoticBudget AsymptoticBudget::from_powers(double p1, double p2, double eps1, double eps2) {
  const auto lambda = [](double p, double eps) {
    return eps > 0.0 ? p / std::sqrt(2.0 * eps) : std::numeric_limits<double>::infinity();
  };
  AsymptoticBudget b{lambda(p1, eps1), lambda(p2, eps2), p1, p2, eps1, eps2};
  b.validate();
  return b;
}

void AsymptoticBudget::validate() const {
  const auto check = [](double lambda, double p, double eps) {
    if (!(p > 0.0 && eps >= 0.0 && lambda > 0.0))
      throw std::invalid_argument("asymptotic budget needs P > 0, eps >= 0, lambda > 0");
    const double implied = eps > 0.0 ? p / std::sqrt(2.0 * eps) : std::numeric_limits<double>::infinity();
    const bool same = std::isinf(implied) ? std::isinf(lambda) : std::abs(lambda - implied) <= 1e-9 * std::max(1.0, implied);
    if (!same) throw std::invalid_argument("lambda is inconsistent with P / sqrt(2 eps)");
  };
  check(lambda1, p1, eps1);
  check(lambda2, p2, eps2);
}

Thresholds asymptotic_thresholds(const AsymptoticBudget& budget) {
  budget.validate();
  const double p1 = budget.p1;
  const double p2 = budget.p2;
  const double s1 = std::sqrt(2.0 * budget.eps1);
  const double s2 = std::sqrt(2.0 * budget.eps2);
  const bool small1 = budget.lambda1 < 1.0;
  const bool small2 = budget.lambda2 < 1.0;

  if (small1 && small2) {
    return {(p2 + s1 * p2) / (p2 + s2 * (s1 - p1)), (p1 + s2 * p1) / (p1 + s1 * (s2 - p2))};
  }
  if (small1) return {(1.0 + s1) / (1.0 + s1 - p1), 1.0 + p2 - budget.eps2};
  if (small2) return {1.0 + p1 - budget.eps1, (1.0 + s2) / (1.0 + s2 - p2)};
  return {1.0 + p1, 1.0 + p2};
}

}  // namespace gicpc
