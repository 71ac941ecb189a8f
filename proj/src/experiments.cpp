#include "gicpc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gicpc/cgzic.hpp"
#include "gicpc/csv.hpp"
#include "gicpc/errors.hpp"
#include "gicpc/schemes_two_user.hpp"

namespace gicpc {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw std::invalid_argument(std::string(what) + ": cannot parse number '" + s + "'");
  return v;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Scheme> ordered_schemes(const std::vector<Scheme>& schemes) {
  std::vector<Scheme> s = schemes;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

TwoUserChannel two_user_at(const TwoUserChannel& base, std::string_view param, double x) {
  TwoUserChannel ch = base;
  if (param == "a") {
    ch.a = x;
  } else if (param == "b") {
    ch.b = x;
  } else if (param == "p1") {
    ch.user1.power = x;
  } else if (param == "p2") {
    ch.user2.power = x;
  } else if (param == "eps1") {
    ch.user1.eps = x;
  } else if (param == "eps2") {
    ch.user2.eps = x;
  } else if (param == "eps") {
    ch.user1.eps = x;
    ch.user2.eps = x;
  } else {
    throw std::invalid_argument("unknown two-user sweep parameter '" + std::string(param) + "'");
  }
  return ch;
}

CgzicChannel cgzic_at(const CgzicChannel& base, std::string_view param, double x) {
  CgzicChannel ch = base;
  if (param == "a1") {
    ch.a1 = x;
  } else if (param == "a2") {
    ch.a2 = x;
  } else if (param == "p1" || param == "p2" || param == "p3") {
    ch.users[static_cast<std::size_t>(param[1] - '1')].power = x;
  } else if (param == "eps1" || param == "eps2" || param == "eps3") {
    ch.users[static_cast<std::size_t>(param[3] - '1')].eps = x;
  } else if (param == "eps") {
    for (auto& u : ch.users) u.eps = x;
  } else {
    throw std::invalid_argument("unknown cascade sweep parameter '" + std::string(param) + "'");
  }
  return ch;
}

SchemeResult run_two_user(Scheme s, const TwoUserChannel& ch, const SearchOptions& opts) {
  switch (s) {
    case Scheme::I: return scheme_i(ch, opts);
    case Scheme::II: return scheme_ii_tdm(ch, opts);
    case Scheme::III: return scheme_iii(ch, opts);
    case Scheme::IV: return scheme_iv(ch, opts);
  }
  throw std::logic_error("unhandled scheme");
}

SchemeResult run_cgzic(Scheme s, const CgzicChannel& ch, const SearchOptions& opts) {
  switch (s) {
    case Scheme::I: return cgzic_scheme_i(ch, opts);
    case Scheme::II: return cgzic_scheme_ii_tdm(ch, opts);
    case Scheme::III: return cgzic_scheme_iii(ch, opts);
    case Scheme::IV: return cgzic_scheme_iv(ch, opts);
  }
  throw std::logic_error("unhandled scheme");
}

void check_sandwich(const SweepSpec& spec, double x, Scheme s, Rate rate, Rate ub) {
  if (rate > ub + kSandwichTolerance) {
    std::ostringstream msg;
    msg << "row " << spec.param << "=" << format_number(x) << ": R_" << scheme_name(s) << " = " << rate
        << " exceeds R_ub = " << ub;
    throw InvariantViolation(msg.str());
  }
}

void append_argmax(const SweepSpec& spec, const std::optional<SchemeResult>& r, std::vector<Cell>& cells) {
  if (spec.model == Model::TwoUser) {
    const bool has_profile = r && r->profile2;
    cells.push_back(has_profile ? Cell(r->profile2->theta1) : std::nullopt);
    cells.push_back(has_profile ? Cell(r->profile2->theta2) : std::nullopt);
    const bool has_split = r && r->split;
    cells.push_back(has_split ? Cell(r->split->tau1) : std::nullopt);
    cells.push_back(has_split ? Cell(r->split->tau2) : std::nullopt);
  } else {
    const bool has_profile = r && r->profile3;
    cells.push_back(has_profile ? Cell(r->profile3->theta1) : std::nullopt);
    cells.push_back(has_profile ? Cell(r->profile3->theta2) : std::nullopt);
    cells.push_back(has_profile ? Cell(r->profile3->theta3) : std::nullopt);
  }
}

struct RatioSpec {
  Model model;
  std::string param;
  SweepRange range;
  TwoUserChannel two_user;
  CgzicChannel cgzic;
};

UserBudget budget(double p, double eps) { return {p, eps}; }

}  // namespace

void SweepRange::validate() const {
  if (!(std::isfinite(start) && std::isfinite(stop) && std::isfinite(step)))
    throw std::invalid_argument("sweep range must be finite");
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be positive");
  if (start > stop) throw std::invalid_argument("sweep start exceeds stop");
}

SweepRange parse_range(std::string_view text, double default_step_value) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() < 2 || parts.size() > 3)
    throw std::invalid_argument("range must be start:stop[:step], got '" + std::string(text) + "'");
  SweepRange r{parse_number(trim(parts[0]), "range start"), parse_number(trim(parts[1]), "range stop"),
               parts.size() == 3 ? parse_number(trim(parts[2]), "range step") : default_step_value};
  r.validate();
  return r;
}

std::vector<double> sweep_values(const SweepRange& range) {
  range.validate();
  const auto n = static_cast<long>(std::floor((range.stop - range.start) / range.step + 1e-9));
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) v.push_back(range.start + static_cast<double>(k) * range.step);
  if (std::abs(v.back() - range.stop) <= 1e-9 * range.step) v.back() = range.stop;
  return v;
}

double default_step(std::string_view param) { return param.starts_with("eps") ? 0.1 : 0.05; }

void SweepSpec::validate() const {
  if (schemes.empty()) throw std::invalid_argument("no schemes selected");
  for (double x : sweep_values(range)) {
    if (model == Model::TwoUser) {
      two_user_at(two_user, param, x).validate();
    } else {
      cgzic_at(cgzic, param, x).validate();
    }
  }
}

std::vector<std::string> sweep_columns(const SweepSpec& spec) {
  std::vector<std::string> cols{spec.param};
  for (Scheme s : ordered_schemes(spec.schemes)) cols.push_back("R_" + std::string(scheme_name(s)));
  cols.emplace_back("R_ub");
  if (spec.argmax_columns) {
    cols.insert(cols.end(), {"theta1", "theta2"});
    if (spec.model == Model::Cgzic) {
      cols.emplace_back("theta3");
    } else {
      cols.insert(cols.end(), {"tau1", "tau2"});
    }
  }
  return cols;
}

SweepRow evaluate_sweep_point(const SweepSpec& spec, double value, bool regime_as_na) {
  SweepRow row;
  row.swept = value;
  std::optional<SchemeResult> last;
  Rate ub = 0.0;
  std::vector<Scheme> schemes = ordered_schemes(spec.schemes);

  if (spec.model == Model::TwoUser) {
    const TwoUserChannel ch = two_user_at(spec.two_user, spec.param, value);
    ch.validate();
    ub = upper_bound_two_user(ch);
    for (Scheme s : schemes) {
      try {
        last = run_two_user(s, ch, spec.search);
      } catch (const RegimeError&) {
        if (!regime_as_na) throw;
        last.reset();
      }
      if (last) check_sandwich(spec, value, s, last->sum_rate, ub);
      row.cells.push_back(last ? Cell(last->sum_rate) : std::nullopt);
    }
  } else {
    const CgzicChannel ch = cgzic_at(spec.cgzic, spec.param, value);
    ch.validate();
    ub = upper_bound_cgzic(ch);
    for (Scheme s : schemes) {
      try {
        last = run_cgzic(s, ch, spec.search);
      } catch (const RegimeError&) {
        if (!regime_as_na) throw;
        last.reset();
      }
      if (last) check_sandwich(spec, value, s, last->sum_rate, ub);
      row.cells.push_back(last ? Cell(last->sum_rate) : std::nullopt);
    }
  }
  row.cells.push_back(ub);
  if (spec.argmax_columns) append_argmax(spec, last, row.cells);
  return row;
}

void run_sweep(const SweepSpec& spec, const RowSink& sink) {
  spec.validate();
  for (double x : sweep_values(spec.range)) sink(evaluate_sweep_point(spec, x));
}

Figure parse_figure(std::string_view tag) {
  if (tag == "fig4") return Figure::Fig4;
  if (tag == "fig5") return Figure::Fig5;
  if (tag == "fig6") return Figure::Fig6;
  if (tag == "fig7") return Figure::Fig7;
  if (tag == "fig8") return Figure::Fig8;
  if (tag == "fig9") return Figure::Fig9;
  if (tag == "fig10") return Figure::Fig10;
  throw std::invalid_argument("unknown figure tag '" + std::string(tag) + "' (expected fig4..fig10)");
}

namespace {

TwoUserChannel fig4_channel() { return {3.0, 3.0, budget(3.5, 2.0), budget(3.5, 2.0)}; }

CgzicChannel cascade_channel(double eps) {
  CgzicChannel ch;
  ch.a1 = 1.0;
  ch.a2 = 0.5;
  ch.users = {budget(4.0, eps), budget(3.5, eps), budget(3.0, eps)};
  return ch;
}

}  // namespace

SweepSpec figure_sweep(Figure fig) {
  SweepSpec spec;
  switch (fig) {
    case Figure::Fig4:
      spec.model = Model::TwoUser;
      spec.param = "a";
      spec.range = {1.0, 6.0, 0.05};
      spec.two_user = fig4_channel();
      break;
    case Figure::Fig5:
      spec.model = Model::TwoUser;
      spec.param = "eps";
      spec.range = {0.0, 3.5, 0.05};
      spec.two_user = fig4_channel();
      break;
    case Figure::Fig6:
      spec.model = Model::TwoUser;
      spec.param = "a";
      spec.range = {0.01, 0.99, 0.01};
      spec.two_user = fig4_channel();
      spec.two_user.b = 0.0;
      spec.schemes = {Scheme::I, Scheme::II, Scheme::III};
      break;
    case Figure::Fig8:
      spec.model = Model::Cgzic;
      spec.param = "a1";
      spec.range = {1.0, 6.0, 0.05};
      spec.cgzic = cascade_channel(2.0);
      break;
    default:
      throw std::invalid_argument("figure is not a plain rate sweep");
  }
  return spec;
}

std::vector<std::string> figure_columns(Figure fig) {
  switch (fig) {
    case Figure::Fig7: return {"a", "ratio_eps2", "ratio_eps0"};
    case Figure::Fig9: return {"a1", "theta1", "theta2", "theta3"};
    case Figure::Fig10: return {"a1", "ratio_eps2", "ratio_eps0"};
    default: return sweep_columns(figure_sweep(fig));
  }
}

void reproduce_figure(Figure fig, const SearchOptions& search, const RowSink& sink) {
  switch (fig) {
    case Figure::Fig7:
      for (double a : sweep_values({1.0, 6.0, 0.05})) {
        SweepRow row{a, {}};
        for (double eps : {2.0, 0.0}) {
          TwoUserChannel ch = fig4_channel();
          ch.a = a;
          ch.user1.eps = ch.user2.eps = eps;
          row.cells.emplace_back(normalized_sum_rate(ch, search));
        }
        sink(row);
      }
      return;
    case Figure::Fig9:
      for (double a1 : sweep_values({1.0, 6.0, 0.05})) {
        CgzicChannel ch = cascade_channel(2.0);
        ch.a1 = a1;
        const auto p = *cgzic_scheme_iv(ch, search).profile3;
        sink({a1, {p.theta1, p.theta2, p.theta3}});
      }
      return;
    case Figure::Fig10:
      for (double a1 : sweep_values({1.0, 6.0, 0.05})) {
        SweepRow row{a1, {}};
        for (double eps : {2.0, 0.0}) {
          CgzicChannel ch = cascade_channel(eps);
          ch.a1 = a1;
          row.cells.emplace_back(cgzic_scheme_iv(ch, search).sum_rate / upper_bound_cgzic(ch));
        }
        sink(row);
      }
      return;
    default: {
      SweepSpec spec = figure_sweep(fig);
      spec.search = search;
      run_sweep(spec, sink);
    }
  }
}

}  // namespace gicpc
