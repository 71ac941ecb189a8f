#pragma once

#include <array>

#include "gicpc/numerics.hpp"
#include "gicpc/types.hpp"

namespace gicpc {

// Simple Han-Kobayashi schemes HK(tau1, tau2) on the two-user Gaussian IC at
// full duty cycle. All powers here are signaling powers; any processing cost
// has already been deducted by the caller.

/// The four sum-rate brackets psi_1..psi_4 whose minimum is achievable with
/// the split `split`.
std::array<Rate, 4> hk_psi(double p1, double p2, double a, double b, const PowerSplit& split);

Rate hk_sum_rate_fixed_split(double p1, double p2, double a, double b, const PowerSplit& split);

/// sqrt(a)(b p1 + 1) + sqrt(b)(a p2 + 1) <= 1: treating interference as noise
/// (tau = (0,0)) is optimal.
bool noisy_interference_test(double a, double b, double p1, double p2);

struct HkResult {
  Rate rate = 0.0;
  PowerSplit split;
};

/// max over splits of min(psi). Strong interference (a, b >= 1) returns the
/// tau = (1,1) value and noisy interference the tau = (0,0) value without a
/// search; every other regime runs maximize_on_grid over [0,1]^2 with
/// `opts`.
HkResult hk_sum_rate(double p1, double p2, double a, double b, const GridOptions& opts = {});

}  // namespace gicpc
