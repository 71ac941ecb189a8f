#include "gicpc/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gicpc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void UserBudget::validate() const {
  require(std::isfinite(power) && power > 0.0, "user power must be positive, got " + std::to_string(power));
  require(finite_nonneg(eps), "processing cost must be non-negative, got " + std::to_string(eps));
  require(eps <= power, "processing cost " + std::to_string(eps) + " exceeds power " + std::to_string(power));
}

void TwoUserChannel::validate() const {
  require(finite_nonneg(a) && finite_nonneg(b), "cross gains a, b must be non-negative");
  user1.validate();
  user2.validate();
}

void PowerSplit::validate() const {
  require(tau1 >= 0.0 && tau1 <= 1.0 && tau2 >= 0.0 && tau2 <= 1.0, "power split fractions must lie in [0,1]");
}

void CgzicChannel::validate() const {
  require(finite_nonneg(a1) && finite_nonneg(a2), "cross gains a1, a2 must be non-negative");
  for (const auto& u : users) u.validate();
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::I: return "I";
    case Scheme::II: return "II";
    case Scheme::III: return "III";
    case Scheme::IV: return "IV";
  }
  return "?";
}

}  // namespace gicpc
