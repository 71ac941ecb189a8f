// gicpc: sum-rate sweeps, threshold queries and figure presets for bursty
// Gaussian interference channels with processing cost. Writes CSV.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gicpc/csv.hpp"
#include "gicpc/errors.hpp"
#include "gicpc/experiments.hpp"
#include "gicpc/single_user.hpp"
#include "gicpc/very_strong.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitRegime = 3;
constexpr int kExitInvariant = 4;

struct Flags {
  std::optional<double> a, b, a1, a2;
  std::optional<double> p1, p2, p3;
  std::optional<double> eps1, eps2, eps3;
  std::optional<std::string> sweep;
  std::optional<std::string> range;
  std::vector<std::string> schemes{"I", "II", "III", "IV"};
  std::string out = "stdout";
  std::optional<double> grid_res;
  std::optional<int> refinements;
  bool argmax = false;
  std::string mode = "exact";
  std::string figure;
};

std::vector<gicpc::Scheme> parse_schemes(const std::vector<std::string>& items) {
  std::vector<gicpc::Scheme> out;
  for (const std::string& item : items) {
    if (item == "I" || item == "1") {
      out.push_back(gicpc::Scheme::I);
    } else if (item == "II" || item == "2") {
      out.push_back(gicpc::Scheme::II);
    } else if (item == "III" || item == "3") {
      out.push_back(gicpc::Scheme::III);
    } else if (item == "IV" || item == "4") {
      out.push_back(gicpc::Scheme::IV);
    } else {
      throw std::invalid_argument("unknown scheme '" + item + "' (expected I, II, III, IV)");
    }
  }
  if (out.empty()) throw std::invalid_argument("no schemes selected");
  return out;
}

gicpc::TwoUserChannel two_user_channel(const Flags& f) {
  gicpc::TwoUserChannel ch{3.0, 3.0, {3.5, 2.0}, {3.5, 2.0}};
  ch.a = f.a.value_or(ch.a);
  ch.b = f.b.value_or(ch.b);
  ch.user1 = {f.p1.value_or(3.5), f.eps1.value_or(2.0)};
  ch.user2 = {f.p2.value_or(3.5), f.eps2.value_or(2.0)};
  return ch;
}

gicpc::CgzicChannel cgzic_channel(const Flags& f) {
  gicpc::CgzicChannel ch;
  ch.a1 = f.a1.value_or(3.0);
  ch.a2 = f.a2.value_or(0.5);
  ch.users = {gicpc::UserBudget{f.p1.value_or(4.0), f.eps1.value_or(2.0)},
              gicpc::UserBudget{f.p2.value_or(3.5), f.eps2.value_or(2.0)},
              gicpc::UserBudget{f.p3.value_or(3.0), f.eps3.value_or(2.0)}};
  return ch;
}

gicpc::SearchOptions search_options(const Flags& f, gicpc::Model model) {
  gicpc::SearchOptions s;
  gicpc::GridOptions& g = model == gicpc::Model::Cgzic ? s.cube : s.plane;
  if (f.grid_res) g.resolution = *f.grid_res;
  if (f.refinements) g.refinements = *f.refinements;
  if (!(g.resolution > 0.0 && g.resolution <= 1.0)) throw std::invalid_argument("--grid-res must be in (0, 1]");
  if (g.refinements < 0) throw std::invalid_argument("--refinements must be non-negative");
  return s;
}

double current_value(const gicpc::SweepSpec& spec) {
  if (spec.model == gicpc::Model::TwoUser) return spec.two_user.a;
  return spec.cgzic.a1;
}

void run_sweep_command(const Flags& f, gicpc::Model model, std::ostream& os) {
  gicpc::SweepSpec spec;
  spec.model = model;
  spec.two_user = two_user_channel(f);
  spec.cgzic = cgzic_channel(f);
  spec.schemes = parse_schemes(f.schemes);
  spec.argmax_columns = f.argmax;
  spec.search = search_options(f, model);

  gicpc::CsvWriter csv(os);
  if (!f.sweep) {
    // Scalar query at the fixed channel: regime errors are fatal here.
    if (f.range) throw std::invalid_argument("--range requires --sweep");
    spec.param = model == gicpc::Model::TwoUser ? "a" : "a1";
    const auto row = gicpc::evaluate_sweep_point(spec, current_value(spec), false);
    csv.header(gicpc::sweep_columns(spec));
    csv.row(row);
    return;
  }
  spec.param = *f.sweep;
  if (!f.range) throw std::invalid_argument("--sweep requires --range");
  spec.range = gicpc::parse_range(*f.range, gicpc::default_step(spec.param));
  spec.validate();
  csv.header(gicpc::sweep_columns(spec));
  gicpc::run_sweep(spec, [&](const gicpc::SweepRow& r) { csv.row(r); });
}

void run_single_user(const Flags& f, std::ostream& os) {
  const gicpc::UserBudget u{f.p1.value_or(3.5), f.eps1.value_or(2.0)};
  u.validate();
  const auto bp = gicpc::optimal_burstiness(u);
  gicpc::CsvWriter csv(os);
  csv.header({"P", "eps", "theta", "nu", "rate"});
  csv.row(std::vector<gicpc::Cell>{u.power, u.eps, bp.theta, bp.nu, gicpc::interference_free_rate(u)});
}

void run_thresholds(const Flags& f, std::ostream& os) {
  const auto ch = two_user_channel(f);
  ch.validate();
  gicpc::Thresholds t;
  if (f.mode == "exact") {
    t = gicpc::very_strong_thresholds(ch);
  } else if (f.mode == "asymptotic") {
    t = gicpc::asymptotic_thresholds(
        gicpc::AsymptoticBudget::from_powers(ch.user1.power, ch.user2.power, ch.user1.eps, ch.user2.eps));
  } else {
    throw std::invalid_argument("--mode must be exact or asymptotic");
  }
  gicpc::CsvWriter csv(os);
  csv.header({"a_min", "b_min", "a_classical", "b_classical"});
  csv.row(std::vector<gicpc::Cell>{t.a_min, t.b_min, 1.0 + ch.user1.power, 1.0 + ch.user2.power});
}

void run_reproduce(const Flags& f, std::ostream& os) {
  const auto fig = gicpc::parse_figure(f.figure);
  const bool cascade = fig == gicpc::Figure::Fig8 || fig == gicpc::Figure::Fig9 || fig == gicpc::Figure::Fig10;
  const auto search = search_options(f, cascade ? gicpc::Model::Cgzic : gicpc::Model::TwoUser);
  gicpc::CsvWriter csv(os);
  csv.header(gicpc::figure_columns(fig));
  gicpc::reproduce_figure(fig, search, [&](const gicpc::SweepRow& r) { csv.row(r); });
}

void add_channel_flags(CLI::App& app, Flags& f) {
  app.add_option("--a", f.a, "two-user cross gain into receiver 1")->group("Channel");
  app.add_option("--b", f.b, "two-user cross gain into receiver 2")->group("Channel");
  app.add_option("--a1", f.a1, "cascade gain of user 1 at receiver 2")->group("Channel");
  app.add_option("--a2", f.a2, "cascade gain of user 2 at receiver 3")->group("Channel");
  app.add_option("--p1", f.p1, "average power of user 1")->group("Channel");
  app.add_option("--p2", f.p2, "average power of user 2")->group("Channel");
  app.add_option("--p3", f.p3, "average power of user 3")->group("Channel");
  app.add_option("--eps1", f.eps1, "processing cost of user 1")->group("Channel");
  app.add_option("--eps2", f.eps2, "processing cost of user 2")->group("Channel");
  app.add_option("--eps3", f.eps3, "processing cost of user 3")->group("Channel");
  app.add_option("--sweep", f.sweep, "swept parameter (a, b, a1, a2, p1..p3, eps1..eps3, eps)")->group("Sweep");
  app.add_option("--range", f.range, "start:stop[:step]")->group("Sweep");
  app.add_option("--schemes", f.schemes, "comma-separated subset of I,II,III,IV")->delimiter(',')->group("Sweep");
  app.add_flag("--argmax", f.argmax, "append maximizing fractions (and power split)")->group("Sweep");
  app.add_option("--mode", f.mode, "threshold mode: exact or asymptotic")->group("Thresholds");
  app.add_option("--figure", f.figure, "fig4 .. fig10")->group("Reproduce");
  app.add_option("--grid-res", f.grid_res, "coarse grid step of the maximizer")->group("Search");
  app.add_option("--refinements", f.refinements, "refinement rounds of the maximizer")->group("Search");
  app.add_option("--out", f.out, "output file or stdout")->group("Output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum rates of bursty Gaussian interference channels with processing cost"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  add_channel_flags(app, f);

  auto* single = app.add_subcommand("single-user", "optimal burst fraction and rate of user 1 (--p1, --eps1)");
  auto* two = app.add_subcommand("two-user", "two-user interference channel");
  auto* two_sweep = two->add_subcommand("sweep", "scheme sum rates, optionally swept over one parameter");
  auto* two_thr = two->add_subcommand("thresholds", "very strong interference thresholds");
  two->require_subcommand(1);
  auto* cg = app.add_subcommand("cgzic", "three-user cascade Z channel");
  auto* cg_sweep = cg->add_subcommand("sweep", "scheme sum rates, optionally swept over one parameter");
  cg->require_subcommand(1);
  auto* repro = app.add_subcommand("reproduce", "preset figure datasets");
  for (auto* sub : {single, two, two_sweep, two_thr, cg, cg_sweep, repro}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidArgs;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  try {
    if (f.out != "stdout") {
      file.open(f.out);
      if (!file) throw std::invalid_argument("cannot open output file '" + f.out + "'");
      os = &file;
    }
    if (*single) {
      run_single_user(f, *os);
    } else if (*two_sweep) {
      run_sweep_command(f, gicpc::Model::TwoUser, *os);
    } else if (*two_thr) {
      run_thresholds(f, *os);
    } else if (*cg_sweep) {
      run_sweep_command(f, gicpc::Model::Cgzic, *os);
    } else if (*repro) {
      if (f.figure.empty()) throw std::invalid_argument("reproduce requires --figure");
      run_reproduce(f, *os);
    }
  } catch (const gicpc::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const gicpc::RegimeError& e) {
    std::cerr << "regime error: " << e.what() << '\n';
    return kExitRegime;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalidArgs;
  } catch (const gicpc::DomainError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalidArgs;
  }
  return kExitOk;
}
