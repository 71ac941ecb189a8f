// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gicpc/cgzic.hpp"
#include "gicpc/experiments.hpp"
#include "gicpc/numerics.hpp"
#include "gicpc/schemes_two_user.hpp"
#include "gicpc/single_user.hpp"
#include "gicpc/very_strong.hpp"
#include "oracles.hpp"

using namespace gicpc;

namespace {

// Tolerances.
constexpr double kTheta = 0.005;
constexpr double kNu = 0.02;
constexpr double kThreshold = 0.05;
constexpr double kExact = 1e-9;
constexpr double kRateBand = 0.005;   // "equal within 0.005"
constexpr double kMeetsUb = 1e-4;     // "meets the upper bound": equality at optimizer precision
constexpr double kDominance = 1e-6;   // slack for ">=" between optimizer outputs
constexpr double kStrict = 1e-9;      // margin for a strict ">"
constexpr double kCrossover = 0.1 + 1e-9;
constexpr double kRatioHigh = 0.999;
constexpr double kRatioSat = 0.01;
constexpr double kFraction3 = 0.02;
constexpr double kTheta1Cascade = 0.01;
constexpr double kCascadeBand = 0.01;
constexpr double kLambertW = 1e-12;
constexpr double kAccounting = 1e-9;
constexpr double kIdentity = 1e-12;
constexpr double kOracle2 = 2e-3;
constexpr double kOracle3 = 5e-3;
constexpr double kTwoUserSeconds = 30.0;
constexpr double kCascadeSeconds = 60.0;

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "    ok   " : "    FAIL ") + what);
  }
};

std::string fmt(const char* f, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

TwoUserChannel two_user(double a, double b, double P1, double e1, double P2, double e2) {
  return {a, b, {P1, e1}, {P2, e2}};
}

std::vector<SweepRow> collect(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  run_sweep(spec, [&](const SweepRow& r) { rows.push_back(r); });
  return rows;
}

// First sweep value from which `pred` holds at every later point; NaN if it
// fails at the last point.
double holds_from(const std::vector<SweepRow>& rows, const std::function<bool(const SweepRow&)>& pred) {
  double from = std::nan("");
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!pred(*it)) break;
    from = it->swept;
  }
  return from;
}

// Column indices for the full four-scheme sweeps: R_I, R_II, R_III, R_IV, R_ub.
enum Col { kI = 0, kII = 1, kIII = 2, kIV = 3, kUb = 4 };

double at(const SweepRow& r, int c) { return *r.cells[static_cast<std::size_t>(c)]; }

Criterion single_user_anchor() {
  Criterion c;
  const auto bp = optimal_burstiness({3.5, 2.0});
  c.expect(std::abs(bp.theta - 0.76) <= kTheta, fmt("theta*(3.5, 2) = %.6f, target 0.76 +- %.3f", bp.theta, kTheta));
  c.expect(std::abs(bp.nu - 2.59) <= kNu, fmt("nu*(3.5, 2) = %.6f, target 2.59 +- %.3f", bp.nu, kNu));
  const double t4 = optimal_burstiness({4.0, 2.0}).theta;
  c.expect(std::abs(t4 - 0.87) <= kTheta, fmt("theta*(4, 2) = %.6f, target 0.87 +- %.3f", t4, kTheta));
  return c;
}

Criterion very_strong_threshold() {
  Criterion c;
  const auto t = very_strong_thresholds(two_user(0, 0, 3.5, 2.0, 3.5, 2.0));
  c.expect(std::abs(t.a_min - 2.3) <= kThreshold && std::abs(t.b_min - 2.3) <= kThreshold,
           fmt("thresholds (%.6f, %.6f), target 2.3 +- %.2f", t.a_min, t.b_min, kThreshold));
  for (auto [P1, P2] : {std::pair{3.5, 3.5}, std::pair{2.0, 5.0}}) {
    const auto z = very_strong_thresholds(two_user(0, 0, P1, 0.0, P2, 0.0));
    c.expect(std::abs(z.a_min - (1 + P1)) <= kExact && std::abs(z.b_min - (1 + P2)) <= kExact,
             fmt("zero cost, P = (%g, %g): thresholds equal 1 + P to 1e-9", P1, P2));
  }
  return c;
}

Criterion fig4() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = collect(figure_sweep(Figure::Fig4));
  const double secs = seconds_since(t0);

  bool dominates = true;
  double worst_gap = 0.0, worst_at = rows.front().swept;
  double ub_gap = 0.0;
  double ii_min = 1e9, ii_max = -1e9;
  for (const auto& r : rows) {
    for (int k : {kI, kII, kIII}) {
      if (at(r, k) > at(r, kIV) + kDominance) dominates = false;
      if (at(r, k) - at(r, kIV) > worst_gap) {
        worst_gap = at(r, k) - at(r, kIV);
        worst_at = r.swept;
      }
    }
    if (r.swept >= 2.35 - 1e-9) ub_gap = std::max(ub_gap, std::abs(at(r, kUb) - at(r, kIV)));
    ii_min = std::min(ii_min, at(r, kII));
    ii_max = std::max(ii_max, at(r, kII));
  }
  c.expect(dominates, fmt("Scheme IV >= I, II, III everywhere (worst excess %.2e at a = %.2f)", worst_gap, worst_at));
  c.expect(ub_gap <= kRateBand, fmt("max |UB - IV| for a >= 2.35 is %.2e (<= %.3f)", ub_gap, kRateBand));
  const double at1 = std::abs(at(rows.front(), kIV) - at(rows.front(), kII));
  c.expect(rows.front().swept == 1.0 && at1 <= kRateBand, fmt("|IV - II| at a = 1 is %.2e (<= %.3f)", at1, kRateBand));
  c.expect(ii_max - ii_min <= kExact, fmt("Scheme II spread across the sweep %.2e", ii_max - ii_min));
  c.expect(secs < kTwoUserSeconds, fmt("runtime %.2f s (< %.0f s)", secs, kTwoUserSeconds));
  return c;
}

Criterion fig5() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = collect(figure_sweep(Figure::Fig5));
  const double secs = seconds_since(t0);

  const double iv_ub = holds_from(rows, [](const SweepRow& r) { return at(r, kUb) - at(r, kIV) <= kMeetsUb; });
  c.expect(std::abs(iv_ub - 1.6) <= kCrossover, fmt("Scheme IV meets UB from eps = %.2f (target 1.6 +- 0.1)", iv_ub));

  const double ii_over_i = holds_from(rows, [](const SweepRow& r) { return at(r, kII) > at(r, kI); });
  c.expect(std::abs(ii_over_i - 2.1) <= kCrossover,
           fmt("Scheme II above Scheme I from eps = %.2f (target 2.1 +- 0.1)", ii_over_i));

  const double ii_iii =
      holds_from(rows, [](const SweepRow& r) { return std::abs(at(r, kIII) - at(r, kII)) <= kRateBand; });
  c.expect(std::abs(ii_iii - 2.6) <= kCrossover,
           fmt("Scheme III within 0.005 of Scheme II from eps = %.2f (target 2.6 +- 0.1)", ii_iii));

  const double ii_ub = holds_from(rows, [](const SweepRow& r) { return at(r, kUb) - at(r, kII) <= kMeetsUb; });
  c.expect(std::abs(ii_ub - 3.4) <= kCrossover, fmt("Scheme II meets UB from eps = %.2f (target 3.4 +- 0.1)", ii_ub));
  c.expect(secs < kTwoUserSeconds, fmt("runtime %.2f s (< %.0f s)", secs, kTwoUserSeconds));
  return c;
}

Criterion fig6() {
  Criterion c;
  const auto rows = collect(figure_sweep(Figure::Fig6));
  double worst_low = 1e9, worst_low_at = 0.0;
  double worst_high = 0.0;
  for (const auto& r : rows) {
    const double gap = at(r, kIII) - at(r, kII);
    if (r.swept <= 0.26 + 1e-9 && gap < worst_low) {
      worst_low = gap;
      worst_low_at = r.swept;
    }
    if (r.swept >= 0.30 - 1e-9) worst_high = std::max(worst_high, std::abs(gap));
  }
  const double last_strict =
      [&] {
        double last = 0.0;
        for (const auto& r : rows)
          if (at(r, kIII) - at(r, kII) > kStrict) last = r.swept;
        return last;
      }();
  c.expect(worst_low > kStrict, fmt("III - II > 0 for a <= 0.26: smallest gap %.3e at a = %.2f", worst_low, worst_low_at));
  c.expect(worst_high <= kRateBand, fmt("|III - II| <= 0.005 for a >= 0.30: largest %.2e", worst_high));
  c.notes.push_back(fmt("    info last a with III strictly above II: %.2f", last_strict));
  return c;
}

Criterion fig7() {
  Criterion c;
  std::vector<SweepRow> rows;
  reproduce_figure(Figure::Fig7, {}, [&](const SweepRow& r) { rows.push_back(r); });
  const double hi = *rows.back().cells[0];
  c.expect(hi >= kRatioHigh, fmt("eps = 2 ratio at a = %.0f is %.6f (>= 0.999)", rows.back().swept, hi));
  double lo = 1e9, hi0 = -1e9;
  for (const auto& r : rows) {
    if (r.swept >= 5.0 - 1e-9) {
      lo = std::min(lo, *r.cells[1]);
      hi0 = std::max(hi0, *r.cells[1]);
    }
  }
  c.expect(std::abs(lo - 0.9) <= kRatioSat && std::abs(hi0 - 0.9) <= kRatioSat,
           fmt("eps = 0 ratio over a in [5, 6] within [%.6f, %.6f], target 0.90 +- 0.01", lo, hi0));
  return c;
}

Criterion cascade() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = figure_sweep(Figure::Fig8);
  std::vector<SweepRow> rows;
  std::vector<BurstProfile3> argmax;
  for (double a1 : sweep_values(spec.range)) {
    rows.push_back(evaluate_sweep_point(spec, a1));
    auto ch = spec.cgzic;
    ch.a1 = a1;
    argmax.push_back(*cgzic_scheme_iv(ch, spec.search).profile3);
  }
  const double secs = seconds_since(t0);

  bool i_lowest = true, iii_flat = true, iii_above = true, iv_top = true, td = true, t1ok = true;
  double flat_worst = 0.0, above_worst = 1e9, td_worst = 0.0, t1_worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double a1 = r.swept;
    if (at(r, kI) > std::min({at(r, kII), at(r, kIII), at(r, kIV)})) i_lowest = false;
    const double gap = at(r, kIII) - at(r, kII);
    if (a1 < 2.9 - 1e-9) {
      flat_worst = std::max(flat_worst, std::abs(gap));
      if (std::abs(gap) > kCascadeBand) iii_flat = false;
    }
    if (a1 > 3.1 + 1e-9) {
      above_worst = std::min(above_worst, gap);
      if (gap <= kStrict) iii_above = false;
    }
    for (int k : {kI, kII, kIII})
      if (at(r, k) > at(r, kIV) + kDominance) iv_top = false;
    const double s = argmax[i].theta2 + argmax[i].theta3 - 1.0;
    td_worst = std::max(td_worst, std::abs(s));
    if (std::abs(s) > kFraction3) td = false;
    if (a1 >= 2.2 - 1e-9) {
      t1_worst = std::max(t1_worst, std::abs(argmax[i].theta1 - 0.87));
      if (std::abs(argmax[i].theta1 - 0.87) > kTheta1Cascade) t1ok = false;
    }
  }
  c.expect(i_lowest, "Scheme I lowest at every a1");
  c.expect(iii_flat, fmt("|III - TDM| for a1 < 2.9: largest %.2e (<= 0.01)", flat_worst));
  c.expect(iii_above, fmt("III > TDM for a1 > 3.1: smallest gap %.2e", above_worst));
  c.expect(iv_top, "Scheme IV >= I, II, III at every a1");
  c.expect(td, fmt("Scheme IV argmax |theta2 + theta3 - 1| <= 0.02: largest %.2e", td_worst));
  c.expect(t1ok, fmt("Scheme IV argmax theta1 = 0.87 +- 0.01 for a1 >= 2.2: largest deviation %.2e", t1_worst));
  c.expect(secs < kCascadeSeconds, fmt("runtime %.2f s (< %.0f s)", secs, kCascadeSeconds));
  return c;
}

Criterion properties() {
  Criterion c;

  auto g = oracle::rng(2024);
  double w_worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = i % 2 == 0 ? -1.0 / std::numbers::e + oracle::uniform(g, 0.0, 2.0)
                                : std::exp(oracle::uniform(g, -20.0, std::log(1e6)));
    const double w = lambert_w0(x);
    w_worst = std::max(w_worst, std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x)));
  }
  c.expect(w_worst <= kLambertW, fmt("LambertW identity, 1000 points: worst scaled residual %.2e", w_worst));

  double acc_worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double P = oracle::uniform(g, 0.5, 20.0);
    const double eps = oracle::uniform(g, 0.0, P);
    const auto bp = optimal_burstiness({P, eps});
    acc_worst = std::max(acc_worst, std::abs(bp.theta * (bp.nu + eps) - P));
  }
  c.expect(acc_worst <= kAccounting, fmt("power accounting, 100 budgets: worst %.2e", acc_worst));

  int dom_fail = 0;
  for (int i = 0; i < 50; ++i) {
    const double P1 = oracle::uniform(g, 0.5, 6.0), P2 = oracle::uniform(g, 0.5, 6.0);
    const auto ch = two_user(oracle::uniform(g, 0.0, 4.0), oracle::uniform(g, 0.0, 4.0), P1,
                             oracle::uniform(g, 0.0, P1), P2, oracle::uniform(g, 0.0, P2));
    const double ub = upper_bound_two_user(ch);
    const double r1 = scheme_i(ch).sum_rate, r2 = scheme_ii_tdm(ch).sum_rate, r3 = scheme_iii(ch).sum_rate;
    bool ok = r3 >= std::max(r1, r2) - kExact && r1 <= ub + kExact && r2 <= ub + kExact && r3 <= ub + kExact;
    if (ch.a >= 1.0 && ch.b >= 1.0) {
      const double r4 = scheme_iv(ch).sum_rate;
      ok = ok && r4 >= r2 - kExact && r4 <= ub + kExact;
    }
    if (!ok) ++dom_fail;
  }
  c.expect(dom_fail == 0, fmt("dominance chains on 50 random channels: %.0f violations", dom_fail));

  double id_worst = 0.0;
  {
    const auto ch = two_user(2.0, 1.5, 3.5, 2.0, 3.0, 1.5);
    id_worst = std::max(id_worst, std::abs(scheme_iii_profile(ch, {1.0, 1.0}) - scheme_i(ch).sum_rate));
    for (double t1 : {0.4, 0.55, 0.7}) {
      const double tdm = oracle::burst(t1, 3.5, 2.0) + oracle::burst(1 - t1, 3.0, 1.5);
      id_worst = std::max(id_worst, std::abs(scheme_iii_profile(ch, {t1, 1 - t1}) - tdm));
      id_worst = std::max(id_worst, std::abs(scheme_iv_profile(ch, {t1, 1 - t1}) - tdm));
    }
    CgzicChannel cz;
    cz.a1 = 3.0;
    cz.a2 = 0.5;
    cz.users = {UserBudget{4.0, 2.0}, UserBudget{3.5, 2.0}, UserBudget{3.0, 2.0}};
    id_worst = std::max(id_worst, std::abs(cgzic_scheme_iii_profile(cz, {1, 1, 1}) - cgzic_scheme_i(cz).sum_rate));
    const oracle::Chan3 oz{3.0, 0.5, {4, 3.5, 3}, {2, 2, 2}};
    for (double t : {0.45, 0.6})
      id_worst = std::max(id_worst, std::abs(cgzic_scheme_iii_profile(cz, {t, 1 - t, t}) - oracle::cascade_tdm(oz, t, t)));
  }
  c.expect(id_worst <= kIdentity, fmt("profile degeneration identities: worst %.2e", id_worst));

  double o2 = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double P1 = oracle::uniform(g, 1.0, 6.0), P2 = oracle::uniform(g, 1.0, 6.0);
    const auto ch = two_user(oracle::uniform(g, 1.0, 5.0), oracle::uniform(g, 1.0, 5.0), P1,
                             oracle::uniform(g, 0.3, 0.9) * P1, P2, oracle::uniform(g, 0.3, 0.9) * P2);
    const oracle::Chan2 o{ch.a, ch.b, P1, ch.user1.eps, P2, ch.user2.eps};
    o2 = std::max(o2, std::abs(scheme_iv(ch).sum_rate -
                               oracle::overlap_scan(o, 1e-3, [&](double a, double b) { return oracle::scheme4(o, a, b); })));
    o2 = std::max(o2, std::abs(scheme_iii(ch).sum_rate - oracle::overlap_scan(o, 1e-3, [&](double a, double b) {
                                 return oracle::scheme3_strong(o, a, b);
                               })));
    o2 = std::max(o2, std::abs(scheme_ii_tdm(ch).sum_rate - oracle::tdm_scan(o, 1e-4)));
  }
  c.expect(o2 <= kOracle2, fmt("2-D optimizers vs 0.001 exhaustive grid: worst %.2e bits", o2));

  double o3 = 0.0;
  for (double a1 : {1.5, 3.5}) {
    CgzicChannel cz;
    cz.a1 = a1;
    cz.a2 = 0.5;
    cz.users = {UserBudget{4.0, 2.0}, UserBudget{3.5, 2.0}, UserBudget{3.0, 2.0}};
    const oracle::Chan3 oz{a1, 0.5, {4, 3.5, 3}, {2, 2, 2}};
    o3 = std::max(o3, std::abs(cgzic_scheme_iv(cz).sum_rate -
                               oracle::cascade_scan(oz, 0.004, [&](double a, double b, double d) {
                                 return oracle::cascade4(oz, a, b, d);
                               })));
    o3 = std::max(o3, std::abs(cgzic_scheme_iii(cz).sum_rate -
                               oracle::cascade_scan(oz, 0.004, [&](double a, double b, double d) {
                                 return oracle::cascade3(oz, a, b, d);
                               })));
  }
  c.expect(o3 <= kOracle3, fmt("3-D optimizers vs 0.004 exhaustive grid: worst %.2e bits", o3));
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
      {"1 single-user anchor", single_user_anchor},
      {"2 very-strong thresholds", very_strong_threshold},
      {"3 two-user gain sweep (b = 3, P = 3.5, eps = 2)", fig4},
      {"4 two-user cost sweep crossovers (a = b = 3, P = 3.5)", fig5},
      {"5 one-sided weak interference (b = 0)", fig6},
      {"6 normalized sum rate", fig7},
      {"7 cascade channel sweep (a2 = 0.5, P = (4, 3.5, 3), eps = 2)", cascade},
      {"8 property suites", properties},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const Criterion c = run();
    std::printf("%s criterion %s\n", c.ok ? "PASS" : "FAIL", name.c_str());
    for (const auto& n : c.notes) std::printf("%s\n", n.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
