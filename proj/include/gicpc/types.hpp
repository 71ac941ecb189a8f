#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace gicpc {

/// Achievable rate in bits per channel use.
using Rate = double;

/// Average power constraint and per-channel-use processing cost of one
/// transmitter. Requires P > 0 and 0 <= eps <= P.
struct UserBudget {
  double power = 0.0;
  double eps = 0.0;

  void validate() const;
};

/// Single-user optimum: on-fraction and signaling power while on.
struct BurstPoint {
  double theta = 1.0;
  double nu = 0.0;
};

/// Two-user Gaussian IC. `a` scales user 2's signal at receiver 1, `b`
/// scales user 1's signal at receiver 2.
struct TwoUserChannel {
  double a = 0.0;
  double b = 0.0;
  UserBudget user1;
  UserBudget user2;

  void validate() const;
};

/// Common-message power fractions of a simple Han-Kobayashi scheme.
struct PowerSplit {
  double tau1 = 0.0;
  double tau2 = 0.0;

  void validate() const;
  friend bool operator==(const PowerSplit&, const PowerSplit&) = default;
};

struct BurstProfile2 {
  double theta1 = 1.0;
  double theta2 = 1.0;
};

/// Three-user cascade Z channel: user 1 interferes at receiver 2 with gain
/// a1, user 2 interferes at receiver 3 with gain a2.
struct CgzicChannel {
  double a1 = 0.0;
  double a2 = 0.0;
  std::array<UserBudget, 3> users;

  void validate() const;
};

struct BurstProfile3 {
  double theta1 = 1.0;
  double theta2 = 1.0;
  double theta3 = 1.0;
};

enum class Scheme { I = 1, II = 2, III = 3, IV = 4 };

std::string_view scheme_name(Scheme s);

/// Maximized sum rate of one scheme together with its maximizer. Exactly one
/// of the profile fields is set for bursty schemes; `split` is set for the
/// Han-Kobayashi based two-user schemes.
struct SchemeResult {
  Scheme scheme = Scheme::I;
  Rate sum_rate = 0.0;
  std::optional<BurstProfile2> profile2;
  std::optional<BurstProfile3> profile3;
  std::optional<PowerSplit> split;
};

}  // namespace gicpc
