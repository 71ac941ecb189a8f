#pragma once

#include "gicpc/types.hpp"

namespace gicpc {

// Very strong interference with processing cost: the gains for which both
// users keep their interference-free rates theta_i* C(nu_i*) when operating
// at the single-user optimal profile (theta1*, theta2*).

/// rho1 = (1 - theta1*)/theta2*, rho2 = (1 - theta2*)/theta1*.
struct RhoPair {
  double rho1 = 0.0;
  double rho2 = 0.0;
};

RhoPair rho_pair(const TwoUserChannel& ch);

/// Sufficient condition pair
///   1 + nu2* <= (1 + a nu2*)^rho1 (1 + a nu2*/(1 + nu1*))^(1 - rho1)
///   1 + nu1* <= (1 + b nu1*)^rho2 (1 + b nu1*/(1 + nu2*))^(1 - rho2)
/// evaluated with the gains stored in `ch`. Vacuously true when
/// theta1* + theta2* <= 1 (time division is already lossless).
bool is_very_strong(const TwoUserChannel& ch);

struct Thresholds {
  double a_min = 0.0;
  double b_min = 0.0;
};

/// Smallest gains satisfying each condition with equality, found by
/// bisection to 1e-9 (each side is increasing in its gain). The gains
/// stored in `ch` are ignored. is_very_strong holds iff a >= a_min and
/// b >= b_min. Returns (1 + nu1*, 1 + nu2*) analytically when both
/// theta* = 1, and (0, 0) when theta1* + theta2* <= 1.
Thresholds very_strong_thresholds(const TwoUserChannel& ch);

/// Parameters of the small-power, small-cost limit P_i, eps_i -> 0 with
/// P_i / sqrt(2 eps_i) = lambda_i fixed. eps_i = 0 gives lambda_i = +inf.
struct AsymptoticBudget {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;

  static AsymptoticBudget from_powers(double p1, double p2, double eps1, double eps2);
  void validate() const;
};

/// Closed-form thresholds (a_bar, b_bar) of the asymptotic regime,
/// dispatched on whether each lambda_i is below one.
Thresholds asymptotic_thresholds(const AsymptoticBudget& budget);

}  // namespace gicpc
