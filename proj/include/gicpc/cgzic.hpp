#pragma once

#include <array>

#include "gicpc/numerics.hpp"
#include "gicpc/types.hpp"

namespace gicpc {

// Three-user cascade Gaussian Z interference channel (CGZIC):
//   Y1 = X1 + Z1,  Y2 = sqrt(a1) X1 + X2 + Z2,  Y3 = sqrt(a2) X2 + X3 + Z3.
//
// Bursty profiles put users 1 and 3 on during the first theta1 and theta3
// fractions of the block and user 2 on during the last theta2 fraction.
// Feasible profiles satisfy
//   1 - theta2* <= theta_k <= 1                  (k = 1, 3)
//   1 - max(theta1*, theta3*) <= theta2 <= 1
//   theta2 + min(theta1, theta3) >= 1.
//
// Schemes III and IV are derived for the non-trivial case
// theta1* + theta2* >= 1 and theta2* + theta3* >= 1; Scheme IV additionally
// for the mixed regime a1 >= 1, 0 < a2 < 1. Outside it, overhearing helps
// receiver 3 as well when a2 >= 1, only receiver 3 when a1 < 1 <= a2, and
// neither receiver when both gains are below one; no rate expressions are
// provided for those regimes and RegimeError is raised instead.

enum class CgzicRegime { Mixed, BothStrong, WeakThenStrong, Other };

/// Mixed is a1 >= 1 and 0 < a2 < 1; Other covers both gains below one and
/// a vanishing a2.
CgzicRegime classify_regime(double a1, double a2);

/// Effective SNR discounts (gamma1, gamma2, gamma3) of the closed-form
/// three-user sum rate; gamma1 = 1 and each later factor depends on the
/// previous one. A zero-power user in the strong branch gets gamma = 1.
std::array<double, 3> gamma_chain(double a1, double a2, double p1, double p2, double p3);

/// sum_i C(gamma_i p_i).
Rate cgzic_sum_rate(double p1, double p2, double p3, double a1, double a2);

/// Two-user Z channel restriction of the cascade: `first` interferes with
/// `second` at gain `gain`. Equals min{C(p1)+C(p2), C(gain p1 + p2)} for
/// gain >= 1 and C(p1) + C(p2/(1 + gain p1)) for gain <= 1.
Rate zic_sum_rate(double first, double second, double gain);

SchemeResult cgzic_scheme_i(const CgzicChannel& ch, const SearchOptions& opts = {});

/// Time division: users 1 and 3 overlap fully, user 2 takes the remaining
/// 1 - max(theta1, theta3) of the block.
SchemeResult cgzic_scheme_ii_tdm(const CgzicChannel& ch, const SearchOptions& opts = {});

/// Sum rate of independent coding on each fraction of `profile`.
/// Throws InfeasibleError for profiles outside the constraint set.
Rate cgzic_scheme_iii_profile(const CgzicChannel& ch, const BurstProfile3& profile);

SchemeResult cgzic_scheme_iii(const CgzicChannel& ch, const SearchOptions& opts = {});

/// Receiver 2 overhears user 1 while its own transmitter is off and cancels
/// it; user 1's rate is capped by what receiver 2 can decode.
Rate cgzic_scheme_iv_profile(const CgzicChannel& ch, const BurstProfile3& profile);

SchemeResult cgzic_scheme_iv(const CgzicChannel& ch, const SearchOptions& opts = {});

Rate upper_bound_cgzic(const CgzicChannel& ch);

bool is_feasible_profile(const CgzicChannel& ch, const BurstProfile3& profile);

}  // namespace gicpc
