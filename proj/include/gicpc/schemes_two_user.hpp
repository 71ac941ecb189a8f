#pragma once

#include "gicpc/numerics.hpp"
#include "gicpc/types.hpp"

namespace gicpc {

// Sum-rate schemes for the two-user Gaussian IC with processing cost.
//
// Bursty schemes use the profile of users 1 and 2 being on during the first
// theta1 and the last theta2 fraction of the block, overlapping for
// theta1 + theta2 - 1. Feasible profiles satisfy 1 - theta_j* <= theta_i <= 1
// and theta1 + theta2 >= 1. Each user keeps the constant signaling power
// P_i/theta_i - eps_i over its whole on-period.
//
// When theta1* + theta2* <= 1 the users time-share without contention and
// Schemes II-IV all return the interference-free upper bound with profile
// (theta1*, theta2*).

/// Scheme I: no burstiness, Han-Kobayashi at signaling powers P_i - eps_i.
SchemeResult scheme_i(const TwoUserChannel& ch, const SearchOptions& opts = {});

/// Scheme II: time division, theta1 in [1 - theta2*, theta1*], user 2 on
/// the complement. Independent of the gains.
SchemeResult scheme_ii_tdm(const TwoUserChannel& ch, const SearchOptions& opts = {});

/// Scheme III objective at a fixed profile: interference-free rates on the
/// two single-user fractions plus the Han-Kobayashi sum rate on the overlap.
/// Throws InfeasibleError if the profile violates the constraint set.
Rate scheme_iii_profile(const TwoUserChannel& ch, const BurstProfile2& profile, const SearchOptions& opts = {});

/// Scheme III: scheme_iii_profile maximized over feasible profiles.
SchemeResult scheme_iii(const TwoUserChannel& ch, const SearchOptions& opts = {});

/// Scheme IV objective at a fixed profile: both receivers jointly decode
/// both messages over the whole block (compound MAC). Requires a, b >= 1.
Rate scheme_iv_profile(const TwoUserChannel& ch, const BurstProfile2& profile);

/// Scheme IV maximized over feasible profiles. Throws RegimeError unless
/// a >= 1 and b >= 1.
SchemeResult scheme_iv(const TwoUserChannel& ch, const SearchOptions& opts = {});

/// Sum of both users' interference-free rates.
Rate upper_bound_two_user(const TwoUserChannel& ch);

/// scheme_iv / upper_bound_two_user.
double normalized_sum_rate(const TwoUserChannel& ch, const SearchOptions& opts = {});

/// True if `profile` lies in the constraint set of channel `ch` (tolerance
/// 1e-12).
bool is_feasible_profile(const TwoUserChannel& ch, const BurstProfile2& profile);

}  // namespace gicpc
