#pragma once

#include "gicpc/types.hpp"

namespace gicpc {

/// Optimal on-fraction theta* and on-state signaling power nu* = P/theta* - eps
/// of an interference-free user with processing cost.
///
/// theta* = min(1, P W(x) / ((eps-1)(W(x)+1))) with x = (eps-1)/e and W the
/// principal Lambert W branch. eps = 0 returns theta* = 1 directly, and eps
/// within 1e-9 of 1 uses the limit theta* = min(1, P/e). Throws
/// std::invalid_argument if the budget is invalid.
BurstPoint optimal_burstiness(const UserBudget& budget);

/// theta* C(nu*), the best rate the user reaches alone.
Rate interference_free_rate(const UserBudget& budget);

/// Small-power, small-cost limit of theta*: min(1, lambda) with
/// lambda = P/sqrt(2 eps). Throws DomainError for lambda <= 0.
double asymptotic_fraction(double lambda);

}  // namespace gicpc
