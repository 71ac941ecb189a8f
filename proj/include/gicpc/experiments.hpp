#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gicpc/numerics.hpp"
#include "gicpc/types.hpp"

namespace gicpc {

enum class Model { TwoUser, Cgzic };

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.05;

  void validate() const;
};

/// "start:stop:step" (step optional, defaulting to `default_step`).
SweepRange parse_range(std::string_view text, double default_step);

/// start, start + step, ...; stop is included when it lies on the lattice
/// (within 1e-9 step).
std::vector<double> sweep_values(const SweepRange& range);

/// Default sweep step for a parameter: 0.1 for processing costs, 0.05
/// otherwise.
double default_step(std::string_view param);

/// One parameter sweep. The swept parameter overrides the corresponding field
/// of the fixed channel at every point; "eps" sets every user's cost.
/// Recognized names: a, b, p1, p2, eps1, eps2, eps (two-user) and
/// a1, a2, p1, p2, p3, eps1, eps2, eps3, eps (cascade).
struct SweepSpec {
  Model model = Model::TwoUser;
  std::string param = "a";
  SweepRange range;
  TwoUserChannel two_user;
  CgzicChannel cgzic;
  std::vector<Scheme> schemes{Scheme::I, Scheme::II, Scheme::III, Scheme::IV};
  bool argmax_columns = false;
  SearchOptions search;

  /// Throws std::invalid_argument for an unknown parameter, an empty scheme
  /// set, a bad range, or a channel that breaks its invariants at any sweep
  /// point.
  void validate() const;
};

/// Cell of an output row; nullopt renders as "NA" (scheme outside its
/// regime).
using Cell = std::optional<double>;

struct SweepRow {
  double swept = 0.0;
  std::vector<Cell> cells;
};

using RowSink = std::function<void(const SweepRow&)>;

/// Sum rates differing from the upper bound by more than this abort a sweep.
inline constexpr double kSandwichTolerance = 1e-9;

/// Column names: swept parameter, R_<scheme> in I..IV order, R_ub, then
/// theta1, theta2[, theta3][, tau1, tau2] when argmax columns are on. The
/// argmax columns describe the highest-numbered selected scheme.
std::vector<std::string> sweep_columns(const SweepSpec& spec);

/// Evaluates one sweep point. Regime errors leave NA cells unless
/// `regime_as_na` is false, in which case they propagate. Throws
/// InvariantViolation if a rate exceeds the upper bound.
SweepRow evaluate_sweep_point(const SweepSpec& spec, double value, bool regime_as_na = true);

/// Emits one row per sweep value, in sweep order.
void run_sweep(const SweepSpec& spec, const RowSink& sink);

enum class Figure { Fig4, Fig5, Fig6, Fig7, Fig8, Fig9, Fig10 };

/// "fig4" ... "fig10"; throws std::invalid_argument otherwise.
Figure parse_figure(std::string_view tag);

/// The sweep behind a rate figure (fig4, fig5, fig6, fig8). Throws
/// std::invalid_argument for the ratio and fraction figures.
SweepSpec figure_sweep(Figure fig);

std::vector<std::string> figure_columns(Figure fig);

/// fig4/5/6/8: preset sweeps. fig7/fig10: Scheme IV over the upper bound at
/// eps = 2 and eps = 0. fig9: cascade Scheme IV maximizing fractions.
/// `search` replaces the presets' grid settings.
void reproduce_figure(Figure fig, const SearchOptions& search, const RowSink& sink);

}  // namespace gicpc
