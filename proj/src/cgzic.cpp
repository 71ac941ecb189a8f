#include "gicpc/cgzic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gicpc/errors.hpp"
#include "gicpc/single_user.hpp"

namespace gicpc {

namespace {

constexpr double kProfileTol = 1e-12;
constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

struct Optima3 {
  std::array<BurstPoint, 3> user;

  double theta(int i) const { return user[static_cast<std::size_t>(i)].theta; }
  bool nontrivial() const { return theta(0) + theta(1) >= 1.0 && theta(1) + theta(2) >= 1.0; }
};

Optima3 optima(const CgzicChannel& ch) {
  ch.validate();
  Optima3 o;
  for (std::size_t i = 0; i < 3; ++i) o.user[i] = optimal_burstiness(ch.users[i]);
  return o;
}

double signaling_power(double theta, const UserBudget& u) {
  return theta > 0.0 ? std::max(0.0, u.power / theta - u.eps) : 0.0;
}

template <class F>
double over(double fraction, F&& rate) {
  return fraction > 0.0 ? fraction * rate() : 0.0;
}

double next_gamma(double gain, double gamma_prev, double p_prev, double p) {
  if (gain <= gamma_prev) return 1.0 / (1.0 + gain * p_prev);
  if (p == 0.0) return 1.0;
  return std::min(((gain - gamma_prev) * p_prev + p) / (p + gamma_prev * p_prev * p), 1.0);
}

struct Powers {
  double nu1, nu2, nu3;
};

Powers powers(const CgzicChannel& ch, double t1, double t2, double t3) {
  return {signaling_power(t1, ch.users[0]), signaling_power(t2, ch.users[1]), signaling_power(t3, ch.users[2])};
}

double iii_objective(const CgzicChannel& ch, double t1, double t2, double t3) {
  const Powers nu = powers(ch, t1, t2, t3);
  double r = over(1.0 - t2, [&] { return capacity(nu.nu1) + capacity(nu.nu3); }) +
             over(t2 + std::min(t1, t3) - 1.0, [&] { return cgzic_sum_rate(nu.nu1, nu.nu2, nu.nu3, ch.a1, ch.a2); });
  if (t1 >= t3) {
    r += over(t1 - t3, [&] { return zic_sum_rate(nu.nu1, nu.nu2, ch.a1); }) +
         over(1.0 - t1, [&] { return capacity(nu.nu2); });
  } else {
    r += over(t3 - t1, [&] { return zic_sum_rate(nu.nu2, nu.nu3, ch.a2); }) +
         over(1.0 - t3, [&] { return capacity(nu.nu2); });
  }
  return r;
}

double iv_objective(const CgzicChannel& ch, double t1, double t2, double t3) {
  const Powers nu = powers(ch, t1, t2, t3);
  const double own_link = over(t1, [&] { return capacity(nu.nu1); });
  const double overheard = over(1.0 - t2, [&] { return capacity(ch.a1 * nu.nu1); }) +
                           over(t1 + t2 - 1.0, [&] { return capacity(ch.a1 * nu.nu1 / (1.0 + nu.nu2)); });
  const double r23 = over(t2, [&] { return capacity(nu.nu2); }) + over(1.0 - t2, [&] { return capacity(nu.nu3); }) +
                     over(t2 + t3 - 1.0, [&] { return capacity(nu.nu3 / (1.0 + ch.a2 * nu.nu2)); });
  return std::min(own_link, overheard) + r23;
}

void require_nontrivial(const Optima3& opt) {
  if (!opt.nontrivial())
    throw RegimeError("bursty cascade schemes need theta1* + theta2* >= 1 and theta2* + theta3* >= 1");
}

void require_mixed(const CgzicChannel& ch) {
  if (classify_regime(ch.a1, ch.a2) != CgzicRegime::Mixed)
    throw RegimeError("cascade scheme IV is defined for a1 >= 1 and 0 < a2 < 1");
}

void require_feasible(const CgzicChannel& ch, const BurstProfile3& p) {
  if (!is_feasible_profile(ch, p)) throw InfeasibleError("burst profile violates the cascade constraint set");
}

// Maximize over the feasible box, then over the face theta2 = 1 - min(theta1, theta3)
// where user 2 just avoids the longer three-user overlap; the face wins only
// on strict improvement.
template <class F>
SchemeResult maximize_profile(Scheme tag, const Optima3& opt, const SearchOptions& opts, F&& objective) {
  const double lo13 = 1.0 - opt.theta(1);
  const double lo2 = 1.0 - std::max(opt.theta(0), opt.theta(2));

  const auto box = maximize_on_grid(
      [&](std::span<const double> t) {
        if (t[1] + std::min(t[0], t[2]) < 1.0 - kProfileTol) return kMinusInf;
        return objective(t[0], t[1], t[2]);
      },
      make_grid({lo13, lo2, lo13}, {1.0, 1.0, 1.0}, opts.cube));

  SchemeResult r;
  r.scheme = tag;
  r.sum_rate = box.value;
  r.profile3 = BurstProfile3{box.point[0], box.point[1], box.point[2]};

  try {
    const auto face = maximize_on_grid(
        [&](std::span<const double> t) {
          const double t2 = 1.0 - std::min(t[0], t[1]);
          if (t2 < lo2 - kProfileTol) return kMinusInf;
          return objective(t[0], t2, t[1]);
        },
        make_grid({lo13, lo13}, {1.0, 1.0}, opts.plane));
    if (face.value > r.sum_rate) {
      r.sum_rate = face.value;
      r.profile3 = BurstProfile3{face.point[0], 1.0 - std::min(face.point[0], face.point[1]), face.point[1]};
    }
  } catch (const NoFeasiblePointError&) {
    // The face can miss the feasible set entirely; the box result stands.
  }
  return r;
}

}  // namespace

CgzicRegime classify_regime(double a1, double a2) {
  if (a1 >= 1.0 && a2 > 0.0 && a2 < 1.0) return CgzicRegime::Mixed;
  if (a1 >= 1.0 && a2 >= 1.0) return CgzicRegime::BothStrong;
  if (a1 < 1.0 && a2 >= 1.0) return CgzicRegime::WeakThenStrong;
  return CgzicRegime::Other;
}

std::array<double, 3> gamma_chain(double a1, double a2, double p1, double p2, double p3) {
  if (!(a1 >= 0.0 && a2 >= 0.0 && p1 >= 0.0 && p2 >= 0.0 && p3 >= 0.0))
    throw DomainError("gamma_chain: gains and powers must be non-negative");
  const double g2 = next_gamma(a1, 1.0, p1, p2);
  const double g3 = next_gamma(a2, g2, p2, p3);
  return {1.0, g2, g3};
}

Rate cgzic_sum_rate(double p1, double p2, double p3, double a1, double a2) {
  const auto g = gamma_chain(a1, a2, p1, p2, p3);
  return capacity(g[0] * p1) + capacity(g[1] * p2) + capacity(g[2] * p3);
}

Rate zic_sum_rate(double first, double second, double gain) {
  if (!(first >= 0.0 && second >= 0.0 && gain >= 0.0)) throw DomainError("zic_sum_rate: negative argument");
  return capacity(first) + capacity(next_gamma(gain, 1.0, first, second) * second);
}

bool is_feasible_profile(const CgzicChannel& ch, const BurstProfile3& p) {
  const Optima3 opt = optima(ch);
  const double lo13 = 1.0 - opt.theta(1) - kProfileTol;
  const double lo2 = 1.0 - std::max(opt.theta(0), opt.theta(2)) - kProfileTol;
  const double hi = 1.0 + kProfileTol;
  const auto in = [&](double t, double lo) { return t >= lo && t >= 0.0 && t <= hi; };
  return in(p.theta1, lo13) && in(p.theta3, lo13) && in(p.theta2, lo2) &&
         p.theta2 + std::min(p.theta1, p.theta3) >= 1.0 - kProfileTol;
}

SchemeResult cgzic_scheme_i(const CgzicChannel& ch, const SearchOptions&) {
  ch.validate();
  SchemeResult r;
  r.scheme = Scheme::I;
  r.sum_rate = cgzic_sum_rate(ch.users[0].power - ch.users[0].eps, ch.users[1].power - ch.users[1].eps,
                              ch.users[2].power - ch.users[2].eps, ch.a1, ch.a2);
  r.profile3 = BurstProfile3{1.0, 1.0, 1.0};
  return r;
}

SchemeResult cgzic_scheme_ii_tdm(const CgzicChannel& ch, const SearchOptions& opts) {
  const Optima3 opt = optima(ch);
  const double theta2_star = opt.theta(1);
  const auto user2_fraction = [&](double t1, double t3) { return std::min(1.0 - std::max(t1, t3), theta2_star); };
  const auto objective = [&](std::span<const double> t) {
    return burst_rate(t[0], ch.users[0].power, ch.users[0].eps) +
           burst_rate(t[1], ch.users[2].power, ch.users[2].eps) +
           burst_rate(user2_fraction(t[0], t[1]), ch.users[1].power, ch.users[1].eps);
  };
  const double hi1 = opt.theta(0);
  const double hi3 = opt.theta(2);
  const auto best = maximize_on_grid(
      objective,
      make_grid({std::min(1.0 - theta2_star, hi1), std::min(1.0 - theta2_star, hi3)}, {hi1, hi3}, opts.plane));
  SchemeResult r;
  r.scheme = Scheme::II;
  r.sum_rate = best.value;
  r.profile3 = BurstProfile3{best.point[0], user2_fraction(best.point[0], best.point[1]), best.point[1]};
  return r;
}

Rate cgzic_scheme_iii_profile(const CgzicChannel& ch, const BurstProfile3& profile) {
  require_feasible(ch, profile);
  return iii_objective(ch, std::min(profile.theta1, 1.0), std::min(profile.theta2, 1.0),
                       std::min(profile.theta3, 1.0));
}

SchemeResult cgzic_scheme_iii(const CgzicChannel& ch, const SearchOptions& opts) {
  const Optima3 opt = optima(ch);
  require_nontrivial(opt);
  return maximize_profile(Scheme::III, opt, opts,
                          [&](double t1, double t2, double t3) { return iii_objective(ch, t1, t2, t3); });
}

Rate cgzic_scheme_iv_profile(const CgzicChannel& ch, const BurstProfile3& profile) {
  require_mixed(ch);
  require_feasible(ch, profile);
  return iv_objective(ch, std::min(profile.theta1, 1.0), std::min(profile.theta2, 1.0),
                      std::min(profile.theta3, 1.0));
}

SchemeResult cgzic_scheme_iv(const CgzicChannel& ch, const SearchOptions& opts) {
  require_mixed(ch);
  const Optima3 opt = optima(ch);
  require_nontrivial(opt);
  return maximize_profile(Scheme::IV, opt, opts,
                          [&](double t1, double t2, double t3) { return iv_objective(ch, t1, t2, t3); });
}

Rate upper_bound_cgzic(const CgzicChannel& ch) {
  ch.validate();
  Rate total = 0.0;
  for (const auto& u : ch.users) total += interference_free_rate(u);
  return total;
}

}  // namespace gicpc
