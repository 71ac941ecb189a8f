#include "gicpc/schemes_two_user.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gicpc/errors.hpp"
#include "gicpc/hk_two_user.hpp"
#include "gicpc/single_user.hpp"

namespace gicpc {

namespace {

constexpr double kProfileTol = 1e-12;
constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

struct Optima {
  BurstPoint user1;
  BurstPoint user2;

  bool contention_free() const { return user1.theta + user2.theta <= 1.0; }
};

Optima optima(const TwoUserChannel& ch) {
  ch.validate();
  return {optimal_burstiness(ch.user1), optimal_burstiness(ch.user2)};
}

double signaling_power(double theta, const UserBudget& u) {
  return theta > 0.0 ? std::max(0.0, u.power / theta - u.eps) : 0.0;
}

// Rate accrued over a fraction of the block; empty fractions contribute nothing.
template <class F>
double over(double fraction, F&& rate) {
  return fraction > 0.0 ? fraction * rate() : 0.0;
}

double tdm_objective(const TwoUserChannel& ch, const Optima& opt, double theta1) {
  const double theta2 = std::min(1.0 - theta1, opt.user2.theta);
  return burst_rate(theta1, ch.user1.power, ch.user1.eps) + burst_rate(theta2, ch.user2.power, ch.user2.eps);
}

double iii_objective(const TwoUserChannel& ch, double theta1, double theta2, const GridOptions& split) {
  const double nu1 = signaling_power(theta1, ch.user1);
  const double nu2 = signaling_power(theta2, ch.user2);
  return over(1.0 - theta2, [&] { return capacity(nu1); }) + over(1.0 - theta1, [&] { return capacity(nu2); }) +
         over(theta1 + theta2 - 1.0, [&] { return hk_sum_rate(nu1, nu2, ch.a, ch.b, split).rate; });
}

double iv_objective(const TwoUserChannel& ch, double theta1, double theta2) {
  const double nu1 = signaling_power(theta1, ch.user1);
  const double nu2 = signaling_power(theta2, ch.user2);
  const double overlap = theta1 + theta2 - 1.0;
  const double individual = over(theta1, [&] { return capacity(nu1); }) + over(theta2, [&] { return capacity(nu2); });
  const double at_rx1 = over(overlap, [&] { return capacity(nu1 + ch.a * nu2); }) +
                        over(1.0 - theta2, [&] { return capacity(nu1); }) +
                        over(1.0 - theta1, [&] { return capacity(ch.a * nu2); });
  const double at_rx2 = over(overlap, [&] { return capacity(ch.b * nu1 + nu2); }) +
                        over(1.0 - theta2, [&] { return capacity(ch.b * nu1); }) +
                        over(1.0 - theta1, [&] { return capacity(nu2); });
  return std::min({individual, at_rx1, at_rx2});
}

void require_strong(const TwoUserChannel& ch) {
  if (!(ch.a >= 1.0 && ch.b >= 1.0))
    throw RegimeError("scheme IV is defined for strong interference a >= 1 and b >= 1");
}

void require_feasible(const TwoUserChannel& ch, const BurstProfile2& profile) {
  if (!is_feasible_profile(ch, profile)) throw InfeasibleError("burst profile violates the two-user constraint set");
}

// Overlapping schemes: maximize over the feasible box, then compare with the
// zero-overlap edge, where both objectives reduce to time division.
template <class F>
SchemeResult maximize_overlap_scheme(Scheme tag, const TwoUserChannel& ch, const Optima& opt,
                                     const SearchOptions& opts, F&& objective) {
  SchemeResult tdm = scheme_ii_tdm(ch, opts);
  tdm.scheme = tag;
  if (opt.contention_free()) return tdm;

  const auto best = maximize_on_grid(
      [&](std::span<const double> t) {
        if (t[0] + t[1] < 1.0 - kProfileTol) return kMinusInf;
        return objective(t[0], t[1]);
      },
      make_grid({1.0 - opt.user2.theta, 1.0 - opt.user1.theta}, {1.0, 1.0}, opts.plane));
  if (tdm.sum_rate > best.value) return tdm;

  SchemeResult r;
  r.scheme = tag;
  r.sum_rate = best.value;
  r.profile2 = BurstProfile2{best.point[0], best.point[1]};
  return r;
}

}  // namespace

bool is_feasible_profile(const TwoUserChannel& ch, const BurstProfile2& profile) {
  const Optima opt = optima(ch);
  const double t1 = profile.theta1;
  const double t2 = profile.theta2;
  return t1 <= 1.0 + kProfileTol && t2 <= 1.0 + kProfileTol && t1 >= 1.0 - opt.user2.theta - kProfileTol &&
         t2 >= 1.0 - opt.user1.theta - kProfileTol && t1 + t2 >= 1.0 - kProfileTol && t1 >= 0.0 && t2 >= 0.0;
}

SchemeResult scheme_i(const TwoUserChannel& ch, const SearchOptions& opts) {
  ch.validate();
  const HkResult hk = hk_sum_rate(ch.user1.power - ch.user1.eps, ch.user2.power - ch.user2.eps, ch.a, ch.b, opts.plane);
  SchemeResult r;
  r.scheme = Scheme::I;
  r.sum_rate = hk.rate;
  r.split = hk.split;
  return r;
}

SchemeResult scheme_ii_tdm(const TwoUserChannel& ch, const SearchOptions& opts) {
  const Optima opt = optima(ch);
  const double hi = opt.user1.theta;
  const double lo = std::min(1.0 - opt.user2.theta, hi);
  const auto best = maximize_on_grid([&](std::span<const double> t) { return tdm_objective(ch, opt, t[0]); },
                                     make_grid({lo}, {hi}, opts.plane));
  SchemeResult r;
  r.scheme = Scheme::II;
  r.sum_rate = best.value;
  r.profile2 = BurstProfile2{best.point[0], std::min(1.0 - best.point[0], opt.user2.theta)};
  return r;
}

Rate scheme_iii_profile(const TwoUserChannel& ch, const BurstProfile2& profile, const SearchOptions& opts) {
  require_feasible(ch, profile);
  return iii_objective(ch, std::min(profile.theta1, 1.0), std::min(profile.theta2, 1.0), opts.split);
}

SchemeResult scheme_iii(const TwoUserChannel& ch, const SearchOptions& opts) {
  const Optima opt = optima(ch);
  SchemeResult r = maximize_overlap_scheme(Scheme::III, ch, opt, opts,
                                           [&](double t1, double t2) { return iii_objective(ch, t1, t2, opts.split); });
  const auto& p = *r.profile2;
  if (p.theta1 > 0.0 && p.theta2 > 0.0) {
    r.split = hk_sum_rate(signaling_power(p.theta1, ch.user1), signaling_power(p.theta2, ch.user2), ch.a, ch.b,
                          opts.split)
                  .split;
  }
  return r;
}

Rate scheme_iv_profile(const TwoUserChannel& ch, const BurstProfile2& profile) {
  require_strong(ch);
  require_feasible(ch, profile);
  return iv_objective(ch, std::min(profile.theta1, 1.0), std::min(profile.theta2, 1.0));
}

SchemeResult scheme_iv(const TwoUserChannel& ch, const SearchOptions& opts) {
  require_strong(ch);
  const Optima opt = optima(ch);
  SchemeResult r = maximize_overlap_scheme(Scheme::IV, ch, opt, opts,
                                           [&](double t1, double t2) { return iv_objective(ch, t1, t2); });
  r.split = PowerSplit{1.0, 1.0};
  return r;
}

Rate upper_bound_two_user(const TwoUserChannel& ch) {
  ch.validate();
  return interference_free_rate(ch.user1) + interference_free_rate(ch.user2);
}

double normalized_sum_rate(const TwoUserChannel& ch, const SearchOptions& opts) {
  return scheme_iv(ch, opts).sum_rate / upper_bound_two_user(ch);
}

}  // namespace gicpc
